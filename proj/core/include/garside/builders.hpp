#pragma once

#include <iosfwd>
#include <string>

#include "garside/germ.hpp"

namespace garside {

// The two germ families that ship as builders. Other finite types enter
// through germ files.
struct CoxeterSpec {
  enum class Family { A, I2 };
  Family family;
  int rank;  // n for A_n (1..5), m for I_2(m) (>= 3)
};

// Classical Artin germ: simples = Coxeter group elements, product defined
// when lengths add, delta = longest element.
Germ classical_artin(const CoxeterSpec& spec);

// Dual germ: simples = noncrossing reflection factorizations below the
// Coxeter element delta (A_n), respectively {1} u R u {delta} (I_2(m)).
Germ dual_artin(const CoxeterSpec& spec);

// Canonical germ JSON: "1" first then name-sorted simples, name-sorted
// product triples, identity products omitted. Byte-stable for a given germ.
void save_germ(const Germ& germ, std::ostream& out);
std::string germ_to_string(const Germ& germ);

// Parses and re-validates. ParseError on malformed files, ValidationError
// (with witnesses) on broken germs.
Germ load_germ(std::istream& in);
Germ load_germ_file(const std::string& path);
RawGerm raw_germ_from_json_text(const std::string& text);

// Same simple names, same delta, same product triples.
bool same_presentation(const Germ& a, const Germ& b);

}  // namespace garside
