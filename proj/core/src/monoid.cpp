#include "monova/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monova {

FiniteMonoid::FiniteMonoid(int order, std::vector<int> table, std::string name)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
  if (order_ < 1) throw InvalidStructure("monoid order must be at least 1");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw InvalidStructure("monoid table must have order^2 entries, got " +
                           std::to_string(table_.size()));
  for (int v : table_)
    if (v < 0 || v >= order_)
      throw InvalidStructure("monoid table entry " + std::to_string(v) + " out of range");
  for (int a = 0; a < order_; ++a) {
    if (product(0, a) != a)
      throw InvalidStructure("element 0 is not a left unit: 0*" + std::to_string(a) + " = " +
                             std::to_string(product(0, a)));
    if (product(a, 0) != a)
      throw InvalidStructure("element 0 is not a right unit: " + std::to_string(a) + "*0 = " +
                             std::to_string(product(a, 0)));
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (product(product(a, b), c) != product(a, product(b, c)))
          throw InvalidStructure("associativity fails at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ", " + std::to_string(c) + ")");
}

int FiniteMonoid::power(int a, int k) const {
  int result = 0;
  for (int i = 0; i < k; ++i) result = product(result, a);
  return result;
}

bool FiniteMonoid::commutative() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

FiniteMonoid FiniteMonoid::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  long order = 0;
  if (!(in >> order)) throw ParseError("monoid file must start with the order");
  if (order < 1 || order > 512) throw ParseError("monoid order out of range: " + std::to_string(order));
  std::vector<int> table;
  table.reserve(order * order);
  long v = 0;
  while (in >> v) table.push_back(static_cast<int>(v));
  if (!in.eof()) throw ParseError("monoid table contains a non-integer token");
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw ParseError("monoid table must have " + std::to_string(order * order) +
                     " entries, got " + std::to_string(table.size()));
  return FiniteMonoid(static_cast<int>(order), std::move(table));
}

std::string FiniteMonoid::str() const {
  std::ostringstream out;
  out << order_ << '\n';
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (b) out << ' ';
      out << product(a, b);
    }
    out << '\n';
  }
  return out.str();
}

int evaluate(const FiniteMonoid& m, const Word& w, const std::map<Letter, int>& assignment) {
  int result = 0;
  for (Letter l : w) result = m.product(result, assignment.at(l));
  return result;
}

namespace {

// Runs f over all assignments of `letters` into 0..order-1 in lexicographic
// order until f returns true; reports whether f ever did.
bool any_assignment(const std::set<Letter>& letters, int order,
                    const std::function<bool(const std::map<Letter, int>&)>& f) {
  std::vector<Letter> ls(letters.begin(), letters.end());
  std::map<Letter, int> assignment;
  for (Letter l : ls) assignment[l] = 0;
  for (;;) {
    if (f(assignment)) return true;
    int i = static_cast<int>(ls.size()) - 1;
    while (i >= 0 && assignment[ls[i]] == order - 1) {
      assignment[ls[i]] = 0;
      --i;
    }
    if (i < 0) return false;
    ++assignment[ls[i]];
  }
}

std::set<Letter> identity_letters(const Identity& id) {
  std::set<Letter> letters = content(id.lhs);
  auto rhs = content(id.rhs);
  letters.insert(rhs.begin(), rhs.end());
  return letters;
}

}  // namespace

std::optional<std::map<Letter, int>> violating_assignment(const FiniteMonoid& m,
                                                          const Identity& id) {
  std::optional<std::map<Letter, int>> found;
  any_assignment(identity_letters(id), m.order(), [&](const std::map<Letter, int>& a) {
    if (evaluate(m, id.lhs, a) != evaluate(m, id.rhs, a)) {
      found = a;
      return true;
    }
    return false;
  });
  return found;
}

bool satisfies(const FiniteMonoid& m, const Identity& id) {
  return !violating_assignment(m, id).has_value();
}

bool satisfies_all(const FiniteMonoid& m, const Basis& basis) {
  for (const Identity& id : basis.identities())
    if (!satisfies(m, id)) return false;
  return true;
}

FiniteMonoid canonical_form(const FiniteMonoid& m) {
  int n = m.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = m.table();
  std::vector<int> candidate(n * n);
  // Permutations fixing the unit: permute indices 1..n-1 only.
  do {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) candidate[perm[a] * n + perm[b]] = perm[m.product(a, b)];
    if (candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return FiniteMonoid(n, std::move(best), m.name());
}

bool is_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a).table() == canonical_form(b).table();
}

namespace monoids {

FiniteMonoid cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return FiniteMonoid(n, std::move(table), "cyclic_group(" + std::to_string(n) + ")");
}

FiniteMonoid cyclic_aperiodic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_aperiodic: n must be >= 1");
  int size = n + 1;
  std::vector<int> table(size * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) table[a * size + b] = std::min(a + b, n);
  return FiniteMonoid(size, std::move(table), "cyclic_aperiodic(" + std::to_string(n) + ")");
}

FiniteMonoid semilattice_2() {
  return FiniteMonoid(2, {0, 1, 1, 1}, "semilattice_2");
}

FiniteMonoid left_zero_adjoined() {
  return FiniteMonoid(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, "left_zero_adjoined");
}

FiniteMonoid right_zero_adjoined() {
  return FiniteMonoid(3, {0, 1, 2, 1, 1, 2, 2, 1, 2}, "right_zero_adjoined");
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> table(n * n);
  auto idx = [&](int x, int y) { return x * nb + y; };
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.product(x1, x2), b.product(y1, y2));
  std::string name = "direct_product(" + a.name() + ", " + b.name() + ")";
  return FiniteMonoid(n, std::move(table), std::move(name));
}

namespace {

// Splits "f(args)" into name and argument list at top-level commas.
struct Call {
  std::string name;
  std::vector<std::string> args;
};

Call parse_call(std::string_view spec) {
  Call call;
  auto open = spec.find('(');
  if (open == std::string_view::npos) {
    call.name = std::string(spec);
    return call;
  }
  if (spec.back() != ')') throw ParseError("expected ')' at end of \"" + std::string(spec) + "\"");
  call.name = std::string(spec.substr(0, open));
  std::string_view inner = spec.substr(open + 1, spec.size() - open - 2);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
      std::string_view arg = inner.substr(start, i - start);
      while (!arg.empty() && std::isspace(static_cast<unsigned char>(arg.front())))
        arg.remove_prefix(1);
      while (!arg.empty() && std::isspace(static_cast<unsigned char>(arg.back())))
        arg.remove_suffix(1);
      call.args.emplace_back(arg);
      start = i + 1;
    } else if (inner[i] == '(') {
      ++depth;
    } else if (inner[i] == ')') {
      --depth;
    }
  }
  return call;
}

int parse_small_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got \"" + text + "\"");
  }
  if (used != text.size()) throw ParseError("expected an integer, got \"" + text + "\"");
  if (value < 1 || value > 64) throw ParseError("integer out of range 1..64: " + text);
  return value;
}

}  // namespace

FiniteMonoid builtin(std::string_view spec) {
  Call call = parse_call(spec);
  auto arity = [&](std::size_t n) {
    if (call.args.size() != n)
      throw ParseError(call.name + " takes " + std::to_string(n) + " argument(s)");
  };
  if (call.name == "cyclic_group") {
    arity(1);
    return cyclic_group(parse_small_int(call.args[0]));
  }
  if (call.name == "cyclic_aperiodic") {
    arity(1);
    return cyclic_aperiodic(parse_small_int(call.args[0]));
  }
  if (call.name == "semilattice_2") {
    arity(0);
    return semilattice_2();
  }
  if (call.name == "left_zero_adjoined") {
    arity(0);
    return left_zero_adjoined();
  }
  if (call.name == "right_zero_adjoined") {
    arity(0);
    return right_zero_adjoined();
  }
  if (call.name == "direct_product") {
    arity(2);
    return direct_product(builtin(call.args[0]), builtin(call.args[1]));
  }
  throw ParseError("unknown builtin monoid '" + call.name +
                   "' (valid: cyclic_group(n), cyclic_aperiodic(n), semilattice_2, "
                   "left_zero_adjoined, right_zero_adjoined, direct_product(a, b))");
}

std::vector<std::string> builtin_names() {
  return {"cyclic_group(n)",      "cyclic_aperiodic(n)", "semilattice_2",
          "left_zero_adjoined",   "right_zero_adjoined", "direct_product(a, b)"};
}

}  // namespace monoids

namespace {

// Backtracking over undetermined cells in row-major order.  The unit row
// and column are forced, so cells (a, b) with a, b >= 1 remain.  After each
// placement every fully-determined associativity triple is checked.
class MonoidEnumerator {
 public:
  MonoidEnumerator(int order, EnumerationOptions options,
                   const std::function<bool(const FiniteMonoid&)>& visit)
      : n_(order), options_(options), visit_(visit), table_(order * order, -1) {
    for (int i = 0; i < n_; ++i) {
      table_[i] = i;
      table_[i * n_] = i;
    }
  }

  void run() { fill(1, 1); }

 private:
  int at(int a, int b) const { return table_[a * n_ + b]; }

  bool consistent() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int ab = at(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n_; ++c) {
          int bc = at(b, c);
          if (bc < 0) continue;
          int left = at(ab, c);
          int right = at(a, bc);
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    return true;
  }

  void fill(int a, int b) {
    if (stop_) return;
    if (a == n_) {
      FiniteMonoid m(n_, table_);
      if (options_.up_to_isomorphism && canonical_form(m).table() != m.table()) return;
      if (!visit_(m)) stop_ = true;
      return;
    }
    int next_a = b + 1 == n_ ? a + 1 : a;
    int next_b = b + 1 == n_ ? 1 : b + 1;
    for (int v = 0; v < n_ && !stop_; ++v) {
      table_[a * n_ + b] = v;
      if (consistent()) fill(next_a, next_b);
      table_[a * n_ + b] = -1;
    }
  }

  int n_;
  EnumerationOptions options_;
  const std::function<bool(const FiniteMonoid&)>& visit_;
  std::vector<int> table_;
  bool stop_ = false;
};

}  // namespace

void enumerate_monoids(int order, const std::function<bool(const FiniteMonoid&)>& visit,
                       EnumerationOptions options) {
  if (order < 1) throw std::invalid_argument("enumerate_monoids: order must be >= 1");
  if (order == 1) {
    visit(FiniteMonoid(1, {0}));
    return;
  }
  MonoidEnumerator(order, options, visit).run();
}

long count_monoids(int order, EnumerationOptions options) {
  long count = 0;
  enumerate_monoids(order, [&](const FiniteMonoid&) {
    ++count;
    return true;
  }, options);
  return count;
}

std::optional<FiniteMonoid> find_countermodel(const Basis& basis, const Identity& id,
                                              int max_order) {
  for (int order = 1; order <= max_order; ++order) {
    std::optional<FiniteMonoid> found;
    enumerate_monoids(order, [&](const FiniteMonoid& m) {
      if (satisfies_all(m, basis) && !satisfies(m, id)) {
        found = m;
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace monova
