#include "dihedrant/connection_set.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "dihedrant/errors.hpp"

namespace dihedrant {

static constexpr int kMaxVertices = 4096;

ConnectionSet::ConnectionSet(int n) : n_(n), group_(n), members_(2 * n) {
  if (2 * n > kMaxVertices)
    throw std::invalid_argument("group order " + std::to_string(2 * n) +
                                " exceeds the supported limit of 4096");
}

void ConnectionSet::insert_with_inverse(const DihedralElement& e) {
  if (e == group_.identity())
    throw std::invalid_argument("connection sets cannot contain the identity");
  members_.set(group_.index_of(e));
  members_.set(group_.index_of(group_.inverse(e)));
}

void ConnectionSet::insert_class_closure(const DihedralElement& e) {
  if (e == group_.identity())
    throw std::invalid_argument("connection sets cannot contain the identity");
  for (auto& x : group_.conjugacy_class(e)) members_.set(group_.index_of(x));
  for (auto& x : group_.conjugacy_class(group_.inverse(e))) members_.set(group_.index_of(x));
}

std::vector<DihedralElement> ConnectionSet::elements() const {
  std::vector<DihedralElement> out;
  members_.for_each([&](int i) { out.push_back(group_.element_at(i)); });
  return out;
}

std::vector<std::string> ConnectionSet::tokens() const {
  std::vector<std::string> out;
  for (auto& e : elements()) out.push_back(element_token(e));
  return out;
}

ConnectionSet from_class_reps(int n, const std::vector<DihedralElement>& reps) {
  ConnectionSet s(n);
  for (auto& r : reps) s.insert_class_closure(r);
  return s;
}

ConnectionSet from_raw_elements(int n, const std::vector<DihedralElement>& elems) {
  ConnectionSet s(n);
  for (auto& e : elems) s.insert_with_inverse(e);
  return s;
}

ConnectionSet family_knn(int n, int variant) {
  ConnectionSet s(n);
  DihedralGroup g(n);
  switch (variant) {
    case 1:
      for (int i = 0; i < n; ++i) s.insert_with_inverse(g.make(i, 1));
      return s;
    case 2:
    case 3: {
      if (n % 2 != 0)
        throw std::invalid_argument("knn variants 2 and 3 need even n");
      int parity = (variant == 2) ? 0 : 1;
      for (int i = parity; i < n; i += 2) s.insert_with_inverse(g.make(i, 1));
      for (int i = 1; i < n; i += 2) s.insert_with_inverse(g.make(i, 0));
      return s;
    }
    default:
      throw std::invalid_argument("knn variant must be 1, 2 or 3");
  }
}

ConnectionSet family_knn_minus_matching(int n, int variant) {
  if (variant != 1 && variant != 2)
    throw std::invalid_argument("knn_minus_matching variant must be 1 or 2");
  if (n % 2 != 0)
    throw std::invalid_argument("knn_minus_matching needs n = 2k");
  int k = n / 2;
  if (k % 2 == 0 || k < 3)
    throw std::invalid_argument("knn_minus_matching needs n = 2k with k >= 3 odd");
  ConnectionSet s(n);
  DihedralGroup g(n);
  int parity = (variant == 1) ? 0 : 1;
  for (int i = parity; i < n; i += 2) s.insert_with_inverse(g.make(i, 1));
  for (int i = 1; i < n; i += 2)
    if (i != k) s.insert_with_inverse(g.make(i, 0));
  return s;
}

ConnectionSet family_complete(int n) {
  ConnectionSet s(n);
  DihedralGroup g(n);
  for (int i = 1; i < 2 * n; ++i) s.insert_with_inverse(g.element_at(i));
  return s;
}

ConnectionSet family_multipartite(int n, int t) {
  if (t < 2) throw std::invalid_argument("multipartite needs t >= 2");
  if (n % t != 0)
    throw std::invalid_argument("multipartite needs t dividing n");
  if (2 * n / t < 3)
    throw std::invalid_argument("multipartite needs at least 3 parts (2n/t >= 3)");
  ConnectionSet s(n);
  DihedralGroup g(n);
  int step = n / t;  // subgroup <a^step> has order t
  std::vector<char> in_subgroup(n, 0);
  for (int i = 0; i < n; i += step) in_subgroup[i] = 1;
  for (int i = 0; i < n; ++i)
    if (!in_subgroup[i]) s.insert_with_inverse(g.make(i, 0));
  for (int i = 0; i < n; ++i) s.insert_with_inverse(g.make(i, 1));
  return s;
}

static bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

ConnectionSet family_thm14(int p, int pi) {
  if (!is_odd_prime(p)) throw std::invalid_argument("thm14 needs an odd prime p");
  if (pi != 0 && pi != 1) throw std::invalid_argument("thm14 needs pi in {0, 1}");
  int n = 4 * p;
  ConnectionSet s(n);
  DihedralGroup g(n);
  for (int i = pi; i < n; i += 2) s.insert_with_inverse(g.make(i, 1));
  for (int i = 1; i < n; ++i)
    if (std::gcd(i, n) == 1) s.insert_with_inverse(g.make(i, 0));
  return s;
}

static ConnectionSet showcase_family(int n, int pi, const std::vector<int>& rot_exponents) {
  if (pi != 0 && pi != 1) throw std::invalid_argument("pi must be 0 or 1");
  ConnectionSet s(n);
  DihedralGroup g(n);
  for (int i = pi; i < n; i += 2) s.insert_with_inverse(g.make(i, 1));
  for (int e : rot_exponents) s.insert_with_inverse(g.make(e, 0));
  return s;
}

static std::vector<int> coprime_rotations(int n) {
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (std::gcd(i, n) == 1) out.push_back(i);
  return out;
}

ConnectionSet family_ex44_S(int pi) {
  std::vector<int> rots = {5, 25};
  auto o3 = coprime_rotations(30);
  rots.insert(rots.end(), o3.begin(), o3.end());
  return showcase_family(30, pi, rots);
}

ConnectionSet family_ex44_R(int pi) {
  std::vector<int> rots = {3, 9, 21, 27};
  auto o3 = coprime_rotations(30);
  rots.insert(rots.end(), o3.begin(), o3.end());
  return showcase_family(30, pi, rots);
}

ConnectionSet family_ex45_S(int pi) {
  std::vector<int> rots = {7, 35};
  auto o3 = coprime_rotations(42);
  rots.insert(rots.end(), o3.begin(), o3.end());
  return showcase_family(42, pi, rots);
}

ConnectionSet family_ex45_R(int pi) {
  std::vector<int> rots = {3, 9, 15, 27, 33, 39};
  auto o3 = coprime_rotations(42);
  rots.insert(rots.end(), o3.begin(), o3.end());
  return showcase_family(42, pi, rots);
}

ConnectionSet family_case_v(int n, int pi, const std::vector<DihedralElement>& delta) {
  if (n % 2 != 0) throw std::invalid_argument("caseV needs even n");
  if (pi != 0 && pi != 1) throw std::invalid_argument("caseV needs pi in {0, 1}");
  int k = n / 2;
  ConnectionSet s(n);
  DihedralGroup g(n);
  for (int i = pi; i < n; i += 2) s.insert_with_inverse(g.make(i, 1));
  ConnectionSet d(n);
  for (auto& e : delta) {
    if (e.refl || e.rot % 2 == 0)
      throw std::invalid_argument("caseV delta must consist of odd rotations");
    d.insert_with_inverse(e);
  }
  int dsize = d.size();
  if (dsize == 0) throw std::invalid_argument("caseV needs a nonempty delta");
  if (dsize > k - 2)
    throw std::invalid_argument("caseV delta too large: |delta| must be <= n/2 - 2");
  for (auto& e : d.elements()) s.insert_with_inverse(e);
  return s;
}

// --- Spec string parsing -----------------------------------------------------

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }
  void expect_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) != 0)
      throw ParseError("expected '" + w + "'", pos);
    pos += w.size();
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    long v = std::stol(text.substr(start, pos - start));
    if (v > 1 << 20) throw ParseError("integer out of range", start);
    return (int)v;
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum((unsigned char)text[pos]) || text[pos] == '_' || text[pos] == '+'))
      ++pos;
    if (pos == start) throw ParseError("expected a name", pos);
    return text.substr(start, pos - start);
  }
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }
};

std::vector<DihedralElement> parse_token_list(Cursor& c, int n) {
  std::vector<DihedralElement> out;
  do {
    c.skip_ws();
    size_t start = c.pos;
    auto tok = c.word();
    try {
      out.push_back(parse_element_token(tok, n));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  } while (c.eat(','));
  return out;
}

std::vector<DihedralElement> parse_plus_tokens(const std::string& list, int n, size_t err_pos) {
  std::vector<DihedralElement> out;
  size_t start = 0;
  while (start <= list.size()) {
    size_t end = list.find('+', start);
    if (end == std::string::npos) end = list.size();
    auto tok = list.substr(start, end - start);
    if (tok.empty()) throw ParseError("empty token in list", err_pos);
    try {
      out.push_back(parse_element_token(tok, n));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), err_pos);
    }
    if (end == list.size()) break;
    start = end + 1;
  }
  return out;
}

int param_int(const std::map<std::string, std::string>& params, const std::string& key,
              const std::string& family) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("family " + family + " needs parameter " + key);
  try {
    return std::stoi(it->second);
  } catch (...) {
    throw std::invalid_argument("family " + family + ": parameter " + key +
                                " is not an integer");
  }
}

}  // namespace

ConnectionSet build_family(int n, const std::string& name,
                           const std::map<std::string, std::string>& params) {
  auto check_n = [&](int expected) {
    if (n != expected)
      throw std::invalid_argument("family " + name + " is defined for n = " +
                                  std::to_string(expected) + ", got n = " + std::to_string(n));
  };
  if (name == "knn_v1") return family_knn(n, 1);
  if (name == "knn_v2") return family_knn(n, 2);
  if (name == "knn_v3") return family_knn(n, 3);
  if (name == "knn_minus_matching_v1") return family_knn_minus_matching(n, 1);
  if (name == "knn_minus_matching_v2") return family_knn_minus_matching(n, 2);
  if (name == "complete") return family_complete(n);
  if (name == "multipartite") return family_multipartite(n, param_int(params, "t", name));
  if (name == "thm14") {
    int p = param_int(params, "p", name);
    check_n(4 * p);
    return family_thm14(p, param_int(params, "pi", name));
  }
  if (name == "ex44_S") {
    check_n(30);
    return family_ex44_S(param_int(params, "pi", name));
  }
  if (name == "ex44_R") {
    check_n(30);
    return family_ex44_R(param_int(params, "pi", name));
  }
  if (name == "ex45_S") {
    check_n(42);
    return family_ex45_S(param_int(params, "pi", name));
  }
  if (name == "ex45_R") {
    check_n(42);
    return family_ex45_R(param_int(params, "pi", name));
  }
  if (name == "caseV") {
    auto it = params.find("delta");
    if (it == params.end())
      throw std::invalid_argument("family caseV needs parameter delta");
    auto delta = parse_plus_tokens(it->second, n, 0);
    return family_case_v(n, param_int(params, "pi", name), delta);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

ParsedSpec parse_connection_spec(const std::string& text) {
  Cursor c{text};
  c.expect_word("n");
  c.expect('=');
  int n = c.integer();
  if (n < 2) throw ParseError("n must be >= 2", 0);
  if (2 * n > kMaxVertices) throw ParseError("2n exceeds the supported limit of 4096", 0);
  c.expect(';');
  c.expect_word("S");
  c.expect('=');
  c.skip_ws();
  size_t body_pos = c.pos;
  auto kind = c.word();
  c.expect('(');
  ParsedSpec result{n, ConnectionSet(n), ""};
  if (kind == "classes" || kind == "raw") {
    auto elems = parse_token_list(c, n);
    c.expect(')');
    try {
      result.set = (kind == "classes") ? from_class_reps(n, elems) : from_raw_elements(n, elems);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), body_pos);
    }
  } else if (kind == "family") {
    auto fname = c.word();
    std::map<std::string, std::string> params;
    while (c.eat(',')) {
      auto key = c.word();
      c.expect('=');
      params[key] = c.word();
    }
    c.expect(')');
    try {
      result.set = build_family(n, fname, params);
      result.family = fname;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), body_pos);
    }
  } else {
    throw ParseError("body must be classes(...), raw(...) or family(...)", body_pos);
  }
  if (!c.at_end()) throw ParseError("trailing input after spec", c.pos);
  return result;
}

std::vector<GroupAutomorphism> aut_G_S(const ConnectionSet& s) {
  std::vector<GroupAutomorphism> out;
  auto elems = s.elements();
  for (auto& phi : all_group_automorphisms(s.n())) {
    bool fixes = true;
    for (auto& e : elems)
      if (!s.contains(phi.apply(e, s.n()))) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(phi);
  }
  return out;
}

bool is_inner_automorphic(const ConnectionSet& s) {
  // Closure under conjugation by the two group generators is closure under
  // all conjugation.
  const auto& g = s.group();
  DihedralElement a{1, 0}, b{0, 1};
  for (auto& e : s.elements()) {
    if (!s.contains(g.conjugate(e, a))) return false;
    if (!s.contains(g.conjugate(e, b))) return false;
  }
  return true;
}

bool is_connected(const ConnectionSet& s) {
  const auto& g = s.group();
  Bitset reached(g.order());
  reached.set(g.index_of(g.identity()));
  std::vector<int> queue = {g.index_of(g.identity())};
  auto elems = s.elements();
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (auto& e : elems) {
      int y = g.index_of(g.mul(e, g.element_at(x)));
      if (!reached.test(y)) {
        reached.set(y);
        queue.push_back(y);
      }
    }
  }
  return reached.count() == g.order();
}

ConnectionSet apply_group_automorphism(const ConnectionSet& s, const GroupAutomorphism& phi) {
  ConnectionSet out(s.n());
  for (auto& e : s.elements()) out.insert_with_inverse(phi.apply(e, s.n()));
  return out;
}

}  // namespace dihedrant
