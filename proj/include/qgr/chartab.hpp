#ifndef QGR_CHARTAB_HPP
#define QGR_CHARTAB_HPP

#include <string>
#include <utility>
#include <vector>

#include "qgr/axring.hpp"

namespace qgr {

enum class Provenance { builtin, file, computed };

// Store of graded characters: fundamental entries keyed by (node, spectral
// exponent) and simple entries keyed by their dominant top term. Append-only;
// computed entries are cached.
class CharTable {
 public:
  explicit CharTable(CartanDatum c) : cartan_(std::move(c)) {}

  const CartanDatum& cartan() const { return cartan_; }

  // gch of the fundamental with top term q^n omega_i. Rank-1 entries are
  // built in; otherwise served from stored entries, spectrally shifting an
  // entry at the same node when the exact exponent is absent.
  const AXElem& fundamental(int i, int n);

  // gch of the simple with dominant top term gamma. Rank-1 is computed by
  // the string engine; other types must have a stored entry.
  const AXElem& simple(const XElem& gamma);

  void insert_fundamental(int i, int n, AXElem x, Provenance p);
  void insert_simple(XElem gamma, AXElem x, Provenance p);

  const std::map<std::pair<int, int>, AXElem>& fund() const { return fund_; }
  const std::map<XElem, AXElem>& simples() const { return simples_; }
  Provenance fund_provenance(int i, int n) const;
  Provenance simple_provenance(const XElem& gamma) const;

 private:
  CartanDatum cartan_;
  std::map<std::pair<int, int>, AXElem> fund_;
  std::map<XElem, AXElem> simples_;
  std::map<std::pair<int, int>, Provenance> fund_prov_;
  std::map<XElem, Provenance> simple_prov_;
};

// gch V(q^n) = e^{q^n} + e^{-q^{n+2}} in rank 1.
AXElem sl2_fundamental(int n);

// Raise every spectral exponent in every key by m; coefficients unchanged.
AXElem shift_spectral(const AXElem& x, int m);

// Class of the standard module W(gamma): twisted ordered product of
// fundamentals, factors sorted by exponent descending (ties by node
// ascending), with global twist v^{-sum_{k<l} <gamma_k, gamma_l>}.
AXElem standard_char(CharTable& t, const XElem& gamma);

// Greedy maximal q-strings of a dominant rank-1 element, each a descending
// run n, n-2, ..., returned sorted by top exponent descending.
std::vector<std::vector<int>> string_decompose(const XElem& gamma);

// gch of the simple V(gamma); rank-1 built from string characters, cached.
AXElem simple_char(CharTable& t, const XElem& gamma);

// Support sets of W(gamma): Lambda = all eta in Y+ with gamma - Omega(eta)
// in the support, Lambda+ its dominant-difference part.
std::pair<std::vector<YElem>, std::vector<YElem>> lambda_sets(CharTable& t, const XElem& gamma);

// Character-table files: `fund <type> <i> <n> := <AXElem>` and
// `simple <type> <XElem> := <AXElem>` lines, `#` comments. Loading
// revalidates the stored-character invariants.
CharTable table_load(const std::string& path);
void table_save(const CharTable& t, const std::string& path);

// Invariant shared by every stored character: coefficient exactly one at the
// top key gamma, every other key of the form gamma - Omega(eta) with eta in
// Y+ nonzero, all coefficients in N[v,v^{-1}]. Throws DomainError otherwise.
void validate_character(const CartanDatum& c, const XElem& top, const AXElem& x);

}  // namespace qgr

#endif
