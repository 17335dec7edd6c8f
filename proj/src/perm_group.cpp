#include "gpack/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "gpack/error.hpp"
#include "gpack/finite_field.hpp"

namespace gpack {

namespace detail {

/// Flat element storage with an open-addressing hash index.
class ElementStore {
public:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  ElementStore(std::size_t degree, const std::vector<Permutation>& gens, std::size_t cap)
      : degree_(degree) {
    slots_.assign(1024, kEmpty);
    std::vector<Point> buf(degree);
    std::iota(buf.begin(), buf.end(), Point{0});
    insert(buf, 0, 0);
    for (std::size_t i = 0; i < count_; ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& gi = gens[g];
        const Point* e = &data_[i * degree_];
        for (std::size_t j = 0; j < degree_; ++j) buf[j] = gi(e[j]);
        if (find(buf) != kEmpty) continue;
        if (count_ >= cap) throw CapExceeded(cap);
        insert(buf, static_cast<std::uint32_t>(i), static_cast<std::uint16_t>(g));
      }
    }
    // spanning tree children in CSR form
    offsets_.assign(count_ + 1, 0);
    for (std::size_t i = 1; i < count_; ++i) ++offsets_[parent_[i] + 1];
    for (std::size_t i = 0; i < count_; ++i) offsets_[i + 1] += offsets_[i];
    children_.resize(count_ > 0 ? count_ - 1 : 0);
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 1; i < count_; ++i) children_[fill[parent_[i]]++] = static_cast<std::uint32_t>(i);
  }

  std::size_t size() const noexcept { return count_; }
  std::size_t degree() const noexcept { return degree_; }
  std::span<const Point> images(std::size_t i) const { return {&data_[i * degree_], degree_}; }
  std::uint32_t parent(std::size_t i) const { return parent_[i]; }
  std::uint16_t gen(std::size_t i) const { return gen_[i]; }
  std::span<const std::uint32_t> children(std::size_t i) const {
    return {children_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  std::uint32_t find(std::span<const Point> key) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t h = hash_images(key) & mask;
    for (;;) {
      std::uint32_t s = slots_[h];
      if (s == kEmpty) return kEmpty;
      if (std::equal(key.begin(), key.end(), data_.begin() + static_cast<std::ptrdiff_t>(s * degree_)))
        return s;
      h = (h + 1) & mask;
    }
  }

private:
  void insert(std::span<const Point> key, std::uint32_t parent, std::uint16_t gen) {
    if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
    data_.insert(data_.end(), key.begin(), key.end());
    parent_.push_back(parent);
    gen_.push_back(gen);
    place(static_cast<std::uint32_t>(count_));
    ++count_;
  }

  void place(std::uint32_t idx) {
    std::size_t mask = slots_.size() - 1;
    std::size_t h = hash_images(images(idx)) & mask;
    while (slots_[h] != kEmpty) h = (h + 1) & mask;
    slots_[h] = idx;
  }

  void rehash(std::size_t n) {
    slots_.assign(n, kEmpty);
    for (std::size_t i = 0; i < count_; ++i) place(static_cast<std::uint32_t>(i));
  }

  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<Point> data_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint16_t> gen_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> children_;
};

}  // namespace detail

namespace {

std::uint64_t next_group_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)), id_(next_group_id()) {
  if (degree == 0) throw InvalidArgument("group degree must be positive");
  for (const auto& g : generators_)
    if (g.degree() != degree) throw InvalidArgument("generator degree differs from group degree");
  // identity generators carry no information
  std::erase_if(generators_, [](const Permutation& p) { return p.is_identity(); });
}

PermGroup PermGroup::generated(std::size_t degree, std::vector<Permutation> generators, std::string name,
                               std::size_t cap) {
  PermGroup g(degree, std::move(generators), std::move(name));
  g.store_ = std::make_shared<const detail::ElementStore>(degree, g.generators_, cap);
  return g;
}

std::size_t PermGroup::order() const {
  require_enumerated();
  return store_->size();
}

void PermGroup::require_enumerated() const {
  if (!store_) throw InvalidArgument("group '" + name_ + "' is not enumerated");
}

Permutation PermGroup::element(std::size_t index) const {
  auto im = element_images(index);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

std::span<const Point> PermGroup::element_images(std::size_t index) const {
  require_enumerated();
  if (index >= store_->size()) throw InvalidArgument("element index out of range");
  return store_->images(index);
}

std::optional<std::size_t> PermGroup::index_of(std::span<const Point> images) const {
  require_enumerated();
  if (images.size() != degree_) return std::nullopt;
  auto i = store_->find(images);
  if (i == detail::ElementStore::kEmpty) return std::nullopt;
  return i;
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const {
  auto pa = element_images(a);
  auto pb = element_images(b);
  std::vector<Point> buf(degree_);
  for (std::size_t j = 0; j < degree_; ++j) buf[j] = pa[pb[j]];
  return *index_of(buf);
}

std::size_t PermGroup::inverse_index(std::size_t a) const {
  auto pa = element_images(a);
  std::vector<Point> buf(degree_);
  for (std::size_t j = 0; j < degree_; ++j) buf[pa[j]] = static_cast<Point>(j);
  return *index_of(buf);
}

std::size_t PermGroup::parent(std::size_t index) const {
  require_enumerated();
  return store_->parent(index);
}

std::size_t PermGroup::generator_of(std::size_t index) const {
  require_enumerated();
  return store_->gen(index);
}

std::span<const std::uint32_t> PermGroup::children(std::size_t index) const {
  require_enumerated();
  return store_->children(index);
}

PermGroup PermGroup::renamed(std::string name) const {
  PermGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------- constructors

PermGroup make_symmetric(std::size_t n, std::size_t cap) {
  if (n < 2 || n > 10) throw InvalidArgument("symmetric group degree must lie in 2..10");
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<std::size_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), std::size_t{0});
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup::generated(n, std::move(gens), "S" + std::to_string(n), cap);
}

PermGroup make_alternating(std::size_t n, std::size_t cap) {
  if (n < 3 || n > 11) throw InvalidArgument("alternating group degree must lie in 3..11");
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<std::size_t> cyc;
    for (std::size_t i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cyc.push_back(i);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup::generated(n, std::move(gens), "A" + std::to_string(n), cap);
}

PermGroup make_cyclic(std::size_t n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  std::vector<Permutation> gens;
  if (n > 1) {
    std::vector<std::size_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), std::size_t{0});
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup::generated(n, std::move(gens), "C" + std::to_string(n));
}

namespace {

// Action of [[a,b],[c,d]] on the projective line, point q standing for infinity.
Permutation mobius(const FiniteField& f, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  std::size_t q = f.order();
  std::vector<Point> images(q + 1);
  for (std::size_t x = 0; x <= q; ++x) {
    std::size_t num, den;
    if (x == q) {
      num = a;
      den = c;
    } else {
      num = f.add(f.mul(a, x), b);
      den = f.add(f.mul(c, x), d);
    }
    images[x] = static_cast<Point>(den == 0 ? q : f.mul(num, f.inv(den)));
  }
  return Permutation(std::move(images));
}

PermGroup make_projective(std::size_t q, bool special, std::size_t cap) {
  if (FiniteField::prime_base(q) == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  FiniteField f(q);
  std::size_t w = f.primitive_element();
  std::size_t one = 1, zero = 0;
  std::vector<Permutation> gens;
  // diag(w, 1) (or diag(w^2, 1) = w * diag(w, w^-1)), unipotent x -> x+1, and a Weyl element
  std::size_t scale = special ? f.mul(w, w) : w;
  gens.push_back(mobius(f, scale, zero, zero, one));
  gens.push_back(mobius(f, one, one, zero, one));
  gens.push_back(mobius(f, zero, f.neg(one), one, zero));
  std::string name = (special ? "PSL2(" : "PGL2(") + std::to_string(q) + ")";
  return PermGroup::generated(q + 1, std::move(gens), name, cap);
}

}  // namespace

PermGroup make_pgl2(std::size_t q, std::size_t cap) { return make_projective(q, false, cap); }
PermGroup make_psl2(std::size_t q, std::size_t cap) { return make_projective(q, true, cap); }

// ---------------------------------------------------------------- file format

PermGroup parse_group(std::string_view text, std::string name, std::size_t cap) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (degree == 0) {
      std::istringstream ls(line);
      std::string kw;
      long long d = 0;
      if (!(ls >> kw >> d) || kw != "degree" || d <= 0 || d > 65535)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'degree <d>'");
      std::string rest;
      if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing text after degree");
      degree = static_cast<std::size_t>(d);
      continue;
    }
    try {
      gens.push_back(Permutation::parse_cycles(line, degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (degree == 0) throw ParseError("missing 'degree' line");
  try {
    return PermGroup::generated(degree, gens, name, cap);
  } catch (const CapExceeded&) {
    return PermGroup(degree, std::move(gens), std::move(name));
  }
}

PermGroup load_group(const std::filesystem::path& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group(ss.str(), path.stem().string(), cap);
}

std::string format_group(const PermGroup& g) {
  std::ostringstream os;
  if (!g.name().empty()) os << "# " << g.name() << "\n";
  os << "degree " << g.degree() << "\n";
  for (const auto& p : g.generators()) os << p.to_cycle_string() << "\n";
  return os.str();
}

PermGroup enumerate_elements(const PermGroup& g, std::size_t cap) {
  if (cap < 1) throw InvalidArgument("enumeration cap must be at least 1");
  auto e = PermGroup::generated(g.degree(), g.generators(), g.name(), cap);
  return e;
}

// ---------------------------------------------------------------- classes

ConjugacyClassPartition conjugacy_classes(const PermGroup& g) {
  ConjugacyClassPartition out;
  out.group_id = g.id();
  out.group_order = g.order();
  const std::size_t n = g.order();
  const std::size_t deg = g.degree();
  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  out.class_of.assign(n, unset);
  std::vector<Permutation> gens = g.generators();
  std::vector<Permutation> inv;
  for (const auto& x : gens) inv.push_back(x.inverse());
  std::vector<Point> buf(deg);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < n; ++start) {
    if (out.class_of[start] != unset) continue;
    auto cls = static_cast<std::uint32_t>(out.reps.size());
    out.class_of[start] = cls;
    queue.assign(1, start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto x = g.element_images(queue[qi]);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        // gens[k] * x * gens[k]^-1
        for (std::size_t j = 0; j < deg; ++j) buf[j] = gens[k](x[inv[k](j)]);
        std::size_t y = *g.index_of(buf);
        if (out.class_of[y] == unset) {
          out.class_of[y] = cls;
          queue.push_back(y);
        }
      }
    }
    out.reps.push_back(start);
    out.sizes.push_back(queue.size());
    out.element_orders.push_back(g.element(start).order());
  }
  for (std::size_t c = 0; c < out.reps.size(); ++c)
    out.inverse_class.push_back(out.class_of[g.inverse_index(out.reps[c])]);
  return out;
}

// ---------------------------------------------------------------- subgroups

void require_subgroup(const PermGroup& g, const PermGroup& h) {
  if (!g.is_enumerated() || !h.is_enumerated()) throw InvalidArgument("subgroup test needs enumerated groups");
  if (g.degree() != h.degree()) throw InvalidArgument("subgroup degree mismatch");
  for (const auto& x : h.generators())
    if (!g.contains(x)) throw InvalidArgument("'" + h.name() + "' is not a subgroup of '" + g.name() + "'");
  if (g.order() % h.order() != 0) throw InvalidArgument("subgroup order does not divide group order");
}

PermGroup subgroup(const PermGroup& g, std::vector<Permutation> generators, std::string name) {
  for (const auto& x : generators)
    if (!g.contains(x)) throw InvalidArgument("generator is not an element of '" + g.name() + "'");
  return PermGroup::generated(g.degree(), std::move(generators), std::move(name), g.order());
}

PermGroup subgroup_from_elements(const PermGroup& g, const std::vector<std::size_t>& indices,
                                 std::string name) {
  std::vector<std::size_t> order(indices);
  std::mt19937_64 rng(0x5eed1234u + indices.size());
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::generated(g.degree(), {}, name, indices.size());
  for (std::size_t idx : order) {
    if (current.order() == indices.size()) break;
    Permutation x = g.element(idx);
    if (current.contains(x)) continue;
    gens.push_back(x);
    try {
      current = PermGroup::generated(g.degree(), gens, name, indices.size());
    } catch (const CapExceeded&) {
      throw InvalidArgument("element set is not closed under multiplication");
    }
  }
  if (current.order() != indices.size()) throw InvalidArgument("element set is not a subgroup");
  return current;
}

PermGroup stabilizer(const PermGroup& g, std::size_t point) {
  if (point >= g.degree()) throw InvalidArgument("point out of range");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element_images(i)[point] == point) idx.push_back(i);
  std::string name = "Stab(" + std::to_string(point + 1) + "," + g.name() + ")";
  return subgroup_from_elements(g, idx, name);
}

PermGroup derived_subgroup(const PermGroup& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> cgens;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) cgens.push_back(c);
    }
  PermGroup d = PermGroup::generated(g.degree(), cgens, g.name() + "'", g.order());
  // normal closure: add G-conjugates of the generators until stable
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& x : gens) {
      for (std::size_t k = 0; k < cgens.size(); ++k) {
        Permutation y = x * cgens[k] * x.inverse();
        if (!d.contains(y)) {
          cgens.push_back(y);
          d = PermGroup::generated(g.degree(), cgens, g.name() + "'", g.order());
          grew = true;
        }
      }
    }
  }
  return d;
}

std::vector<std::size_t> orbit(const PermGroup& g, std::size_t point) {
  if (point >= g.degree()) throw InvalidArgument("point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::size_t> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& x : g.generators()) {
      std::size_t y = x(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

// ---------------------------------------------------------------- cosets

CosetTransversal coset_transversal(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h);
  CosetTransversal out;
  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  out.index_of.assign(g.order(), unset);
  const std::size_t deg = g.degree();
  std::vector<Point> buf(deg);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (out.index_of[start] != unset) continue;
    auto c = static_cast<std::uint32_t>(out.reps.size());
    out.reps.push_back(start);
    out.index_of[start] = c;
    queue.assign(1, start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto x = g.element_images(queue[qi]);
      for (const auto& y : h.generators()) {
        for (std::size_t j = 0; j < deg; ++j) buf[j] = x[y(j)];
        std::size_t z = *g.index_of(buf);
        if (out.index_of[z] == unset) {
          out.index_of[z] = c;
          queue.push_back(z);
        }
      }
    }
    if (queue.size() != h.order()) throw NumericalError("coset size differs from subgroup order");
  }
  return out;
}

DoubleCosetPartition double_cosets(const PermGroup& g, const PermGroup& h, const CosetTransversal& cosets) {
  DoubleCosetPartition out;
  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  out.orbit_of_coset.assign(cosets.size(), unset);
  const std::size_t deg = g.degree();
  std::vector<Point> buf(deg);
  for (std::size_t start = 0; start < cosets.size(); ++start) {
    if (out.orbit_of_coset[start] != unset) continue;
    auto d = static_cast<std::uint32_t>(out.reps.size());
    out.orbit_of_coset[start] = d;
    std::vector<std::size_t> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto x = g.element_images(cosets.reps[queue[qi]]);
      for (const auto& y : h.generators()) {
        for (std::size_t j = 0; j < deg; ++j) buf[j] = y(x[j]);
        std::size_t c = cosets.index_of[*g.index_of(buf)];
        if (out.orbit_of_coset[c] == unset) {
          out.orbit_of_coset[c] = d;
          queue.push_back(c);
        }
      }
    }
    out.reps.push_back(cosets.reps[start]);
    out.sizes.push_back(queue.size() * h.order());
  }
  return out;
}

std::size_t double_coset_count(const PermGroup& g, const PermGroup& h) {
  auto t = coset_transversal(g, h);
  return double_cosets(g, h, t).size();
}

bool is_two_transitive(const PermGroup& g, const PermGroup& h) {
  auto t = coset_transversal(g, h);
  if (t.size() < 2) return false;
  return double_cosets(g, h, t).size() == 2;
}

}  // namespace gpack
