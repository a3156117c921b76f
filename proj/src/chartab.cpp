#include "qgr/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "qgr/io.hpp"

namespace qgr {

AXElem sl2_fundamental(int n) {
  AXElem a = ax_basis(x_monomial(0, n));
  a.add_term(-x_monomial(0, n + 2), LaurentInt::one());
  return a;
}

AXElem shift_spectral(const AXElem& x, int m) {
  AXElem r;
  for (const auto& [g, p] : x.c) {
    XElem h;
    for (const auto& [ik, gg] : g.c) h.c[{ik.first, ik.second + m}] = gg;
    r.c.emplace(std::move(h), p);
  }
  return r;
}

void validate_character(const CartanDatum& c, const XElem& top, const AXElem& x) {
  if (!x.coeff(top).is_one()) throw DomainError("character top coefficient is not 1");
  for (const auto& [g, p] : x.c) {
    if (!p.is_nonnegative()) throw DomainError("character coefficient outside N[v,v^-1]");
    if (g == top) continue;
    auto eta = solve_omega(c, top - g);
    if (!eta || !eta->is_nonnegative() || eta->is_zero())
      throw DomainError("character support element not below its top term");
  }
}

const AXElem& CharTable::fundamental(int i, int n) {
  if (i < 0 || i >= cartan_.rank()) throw DomainError("node index out of range");
  auto it = fund_.find({i, n});
  if (it != fund_.end()) return it->second;
  if (cartan_.rank() == 1) {
    insert_fundamental(i, n, sl2_fundamental(n), Provenance::builtin);
    return fund_.at({i, n});
  }
  // Spectral shift from a stored entry at the same node.
  auto lo = fund_.lower_bound({i, std::numeric_limits<int>::min()});
  if (lo != fund_.end() && lo->first.first == i) {
    insert_fundamental(i, n, shift_spectral(lo->second, n - lo->first.second),
                       Provenance::computed);
    return fund_.at({i, n});
  }
  throw DomainError("missing fundamental entry for node " + std::to_string(i + 1));
}

void CharTable::insert_fundamental(int i, int n, AXElem x, Provenance p) {
  validate_character(cartan_, x_monomial(i, n), x);
  auto [it, fresh] = fund_.try_emplace({i, n}, std::move(x));
  if (!fresh && it->second != x) throw DomainError("conflicting fundamental entry");
  fund_prov_.try_emplace({i, n}, p);
}

void CharTable::insert_simple(XElem gamma, AXElem x, Provenance p) {
  validate_character(cartan_, gamma, x);
  auto [it, fresh] = simples_.try_emplace(gamma, std::move(x));
  if (!fresh && it->second != x) throw DomainError("conflicting simple entry");
  simple_prov_.try_emplace(std::move(gamma), p);
}

Provenance CharTable::fund_provenance(int i, int n) const { return fund_prov_.at({i, n}); }
Provenance CharTable::simple_provenance(const XElem& g) const { return simple_prov_.at(g); }

namespace {

// Factor a dominant element into fundamental keys in product order:
// exponent descending, ties by node ascending.
std::vector<std::pair<int, int>> product_factors(const XElem& gamma) {
  std::vector<std::pair<int, int>> f;
  for (const auto& [ik, g] : gamma.c) {
    if (g < 0) throw DomainError("standard_char needs a dominant argument");
    for (Int r = 0; r < g; ++r) f.emplace_back(ik.first, ik.second);
  }
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return f;
}

AXElem twisted_product(const CartanDatum& c, const std::vector<XElem>& tops,
                       const std::vector<AXElem>& factors) {
  Int twist = 0;
  for (std::size_t k = 0; k < tops.size(); ++k)
    for (std::size_t l = k + 1; l < tops.size(); ++l)
      twist = checked_add(twist, bracket(c, tops[k], tops[l]));
  AXElem prod = ax_one();
  for (const auto& f : factors) prod = ax_mul(c, prod, f);
  return ax_scale(prod, LaurentInt::monomial(1, static_cast<int>(-twist)));
}

}  // namespace

AXElem standard_char(CharTable& t, const XElem& gamma) {
  auto keys = product_factors(gamma);
  std::vector<XElem> tops;
  std::vector<AXElem> factors;
  tops.reserve(keys.size());
  for (auto [i, n] : keys) {
    tops.push_back(x_monomial(i, n));
    factors.push_back(t.fundamental(i, n));
  }
  return twisted_product(t.cartan(), tops, factors);
}

std::vector<std::vector<int>> string_decompose(const XElem& gamma) {
  std::map<int, Int> mult;
  for (const auto& [ik, g] : gamma.c) {
    if (ik.first != 0) throw DomainError("string decomposition needs rank-1 input");
    if (g < 0) throw DomainError("string decomposition needs a dominant argument");
    mult[ik.second] = g;
  }
  std::vector<std::vector<int>> strings;
  while (!mult.empty()) {
    int n = mult.rbegin()->first;
    std::vector<int> run;
    for (int e = n;; e -= 2) {
      auto it = mult.find(e);
      if (it == mult.end()) break;
      run.push_back(e);
      if (--it->second == 0) mult.erase(it);
    }
    strings.push_back(std::move(run));
  }
  std::stable_sort(strings.begin(), strings.end(),
                   [](const auto& a, const auto& b) { return a.front() > b.front(); });
  return strings;
}

namespace {

XElem string_top(const std::vector<int>& s) {
  XElem x;
  for (int e : s) x.add_term(0, e, 1);
  return x;
}

// Character of one string: flip the i largest entries q^m -> -q^{m+2}.
AXElem string_char(const std::vector<int>& s) {
  AXElem a;
  auto k = static_cast<int>(s.size());
  for (int i = 0; i <= k; ++i) {
    XElem key;
    for (int j = 0; j < i; ++j) key.add_term(0, s[j] + 2, -1);
    for (int j = i; j < k; ++j) key.add_term(0, s[j], 1);
    a.add_term(key, LaurentInt::one());
  }
  return a;
}

}  // namespace

AXElem simple_char(CharTable& t, const XElem& gamma) {
  if (!gamma.is_dominant()) throw DomainError("simple_char needs a dominant argument");
  auto it = t.simples().find(gamma);
  if (it != t.simples().end()) return it->second;
  if (t.cartan().rank() != 1)
    throw DomainError("simple entry unavailable: " + print_x(gamma));
  auto strings = string_decompose(gamma);
  std::vector<XElem> tops;
  std::vector<AXElem> factors;
  for (const auto& s : strings) {
    tops.push_back(string_top(s));
    factors.push_back(string_char(s));
  }
  AXElem r = twisted_product(t.cartan(), tops, factors);
  t.insert_simple(gamma, r, Provenance::computed);
  return t.simples().at(gamma);
}

std::pair<std::vector<YElem>, std::vector<YElem>> lambda_sets(CharTable& t, const XElem& gamma) {
  AXElem w = standard_char(t, gamma);
  std::vector<YElem> lam, lam_plus;
  for (const auto& [g, p] : w.c) {
    auto eta = solve_omega(t.cartan(), gamma - g);
    if (!eta || !eta->is_nonnegative())
      throw DomainError("standard-character support element outside gamma - Y+");
    if (std::find(lam.begin(), lam.end(), *eta) != lam.end()) continue;
    if (succeq_xy(t.cartan(), gamma, *eta)) lam_plus.push_back(*eta);
    lam.push_back(std::move(*eta));
  }
  return {std::move(lam), std::move(lam_plus)};
}

CharTable table_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open table file: " + path);
  std::string line;
  std::optional<CharTable> t;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw DomainError(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    std::string type;
    if (!(ls >> type)) fail("missing Cartan type");
    if (!t)
      t.emplace(build_cartan(type));
    else if (t->cartan().name() != type)
      fail("mixed Cartan types in one table");
    try {
      if (kind == "fund") {
        int i, n;
        std::string sep, body;
        if (!(ls >> i >> n >> sep >> body) || sep != ":=") fail("malformed fund line");
        if (i < 1 || i > t->cartan().rank()) fail("node index out of range");
        t->insert_fundamental(i - 1, n, parse_ax(body), Provenance::file);
      } else if (kind == "simple") {
        std::string key, sep, body;
        if (!(ls >> key >> sep >> body) || sep != ":=") fail("malformed simple line");
        t->insert_simple(parse_x(key), parse_ax(body), Provenance::file);
      } else {
        fail("unknown entry kind: " + kind);
      }
    } catch (const ParseError& e) {
      fail(e.what());
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }
  if (!t) throw DomainError(path + ": empty table file");
  return std::move(*t);
}

void table_save(const CharTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write table file: " + path);
  const std::string& ty = t.cartan().name();
  for (const auto& [key, x] : t.fund())
    out << "fund " << ty << ' ' << key.first + 1 << ' ' << key.second << " := " << print_ax(x)
        << '\n';
  for (const auto& [g, x] : t.simples())
    out << "simple " << ty << ' ' << print_x(g) << " := " << print_ax(x) << '\n';
  if (!out) throw DomainError("write failure: " + path);
}

}  // namespace qgr
