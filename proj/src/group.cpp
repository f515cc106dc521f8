#include "coxeter/group.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>
#include <memory>
#include <unordered_map>

#include "coxeter/errors.hpp"

namespace coxeter {

namespace {

// ---------------------------------------------------------------------------
// Element models per irreducible factor. A state is a flat span of int64
// slots; matrix factors bit-cast doubles into their slots and snap to a 1e-9
// grid when producing dedup keys. The global OrderMismatch check backstops
// the tolerance.
// ---------------------------------------------------------------------------

class Factor {
 public:
  virtual ~Factor() = default;
  virtual std::size_t words() const = 0;
  virtual void identity(std::int64_t* out) const = 0;
  virtual void mul(const std::int64_t* in, int local_gen, bool left,
                   std::int64_t* out) const = 0;
  virtual void key(const std::int64_t* in, std::int64_t* out) const {
    std::copy(in, in + words(), out);
  }
};

// One-line permutation of {1..points}; w(k) sits in slot k-1.
class PermFactor final : public Factor {
 public:
  explicit PermFactor(int points) : points_(points) {}
  std::size_t words() const override {
    return static_cast<std::size_t>(points_);
  }
  void identity(std::int64_t* out) const override {
    for (int i = 0; i < points_; ++i) out[i] = i + 1;
  }
  void mul(const std::int64_t* in, int g, bool left,
           std::int64_t* out) const override {
    std::copy(in, in + points_, out);
    if (left) {
      for (int i = 0; i < points_; ++i) {
        if (out[i] == g + 1)
          out[i] = g + 2;
        else if (out[i] == g + 2)
          out[i] = g + 1;
      }
    } else {
      std::swap(out[g], out[g + 1]);
    }
  }

 private:
  int points_;
};

// Signed permutation of {±1..±n}. Local generator 0 is the sign flip of 1
// (type B) or the map 1<->-2, 2<->-1 (type D); generator j >= 1 is the
// transposition (j, j+1).
class SignedPermFactor final : public Factor {
 public:
  SignedPermFactor(int n, bool type_d) : n_(n), type_d_(type_d) {}
  std::size_t words() const override { return static_cast<std::size_t>(n_); }
  void identity(std::int64_t* out) const override {
    for (int i = 0; i < n_; ++i) out[i] = i + 1;
  }
  void mul(const std::int64_t* in, int g, bool left,
           std::int64_t* out) const override {
    std::copy(in, in + n_, out);
    if (g == 0) {
      if (type_d_) {
        if (left) {
          for (int i = 0; i < n_; ++i) {
            if (out[i] == 1)
              out[i] = -2;
            else if (out[i] == -1)
              out[i] = 2;
            else if (out[i] == 2)
              out[i] = -1;
            else if (out[i] == -2)
              out[i] = 1;
          }
        } else {
          const std::int64_t a = out[0], b = out[1];
          out[0] = -b;
          out[1] = -a;
        }
      } else {
        if (left) {
          for (int i = 0; i < n_; ++i)
            if (out[i] == 1 || out[i] == -1) out[i] = -out[i];
        } else {
          out[0] = -out[0];
        }
      }
      return;
    }
    if (left) {
      for (int i = 0; i < n_; ++i) {
        const std::int64_t a = out[i] < 0 ? -out[i] : out[i];
        if (a == g)
          out[i] = out[i] < 0 ? -(g + 1) : (g + 1);
        else if (a == g + 1)
          out[i] = out[i] < 0 ? -g : g;
      }
    } else {
      std::swap(out[g - 1], out[g]);
    }
  }

 private:
  int n_;
  bool type_d_;
};

// Dihedral group of order 2m: state (k, f) = rho^k sigma^f with the local
// generators sigma = (0,1) and rho*sigma = (1,1).
class DihedralFactor final : public Factor {
 public:
  explicit DihedralFactor(int m) : m_(m) {}
  std::size_t words() const override { return 2; }
  void identity(std::int64_t* out) const override { out[0] = out[1] = 0; }
  void mul(const std::int64_t* in, int g, bool left,
           std::int64_t* out) const override {
    const std::int64_t gk = g == 0 ? 0 : 1;  // rotation part of the generator
    const std::int64_t k = in[0], f = in[1];
    if (left) {
      // (gk,1)*(k,f) = (gk - k, 1 xor f)
      out[0] = ((gk - k) % m_ + m_) % m_;
      out[1] = 1 - f;
    } else {
      // (k,f)*(gk,1): f == 0 -> (k + gk, 1); f == 1 -> (k - gk, 0)
      out[0] = f == 0 ? (k + gk) % m_ : ((k - gk) % m_ + m_) % m_;
      out[1] = 1 - f;
    }
  }

 private:
  int m_;
};

// Reflection representation in the simple-root basis, for E/F/H factors.
// Entries live in the quadratic integer ring Z[x]/(x^2 - px - q), where x
// is the one nontrivial bond value (sqrt(2) for F4, the golden ratio for
// H3/H4, unused for the simply laced E types), stored exactly as coefficient
// pairs (a, b) meaning a + b*x. Group matrices map simple roots to roots, so
// coefficients stay tiny and never overflow.
class MatrixFactor final : public Factor {
 public:
  MatrixFactor(const CoxeterMatrix& m, const std::vector<int>& nodes)
      : r_(static_cast<int>(nodes.size())) {
    p_ = q_ = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        const int mij = m.at(nodes[i], nodes[j]);
        if (mij == 4) {
          p_ = 0;  // x = sqrt(2), x^2 = 2
          q_ = 2;
        } else if (mij == 5) {
          p_ = 1;  // x = 2cos(pi/5), x^2 = x + 1
          q_ = 1;
        }
      }
    gens_.assign(static_cast<std::size_t>(r_) * r_ * r_ * 2, 0);
    for (int s = 0; s < r_; ++s) {
      std::int64_t* g = &gens_[static_cast<std::size_t>(s) * r_ * r_ * 2];
      for (int i = 0; i < r_; ++i) g[(i * r_ + i) * 2] = 1;
      for (int t = 0; t < r_; ++t) {
        std::int64_t* cell = &g[(s * r_ + t) * 2];
        if (t == s) {
          cell[0] = -1;
          cell[1] = 0;
          continue;
        }
        // 2cos(pi/m): m=2 -> 0, m=3 -> 1, m=4 -> sqrt(2), m=5 -> golden.
        const int mst = m.at(nodes[static_cast<std::size_t>(s)],
                             nodes[static_cast<std::size_t>(t)]);
        cell[0] = mst == 3 ? 1 : 0;
        cell[1] = mst >= 4 ? 1 : 0;
      }
    }
  }

  std::size_t words() const override {
    return static_cast<std::size_t>(r_) * r_ * 2;
  }
  void identity(std::int64_t* out) const override {
    std::fill(out, out + words(), 0);
    for (int i = 0; i < r_; ++i) out[(i * r_ + i) * 2] = 1;
  }
  void mul(const std::int64_t* in, int g, bool left,
           std::int64_t* out) const override {
    const std::int64_t* gm = &gens_[static_cast<std::size_t>(g) * r_ * r_ * 2];
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < r_; ++j) {
        std::int64_t acc_a = 0, acc_b = 0;
        for (int k = 0; k < r_; ++k) {
          const std::int64_t* lhs =
              left ? &gm[(i * r_ + k) * 2] : &in[(i * r_ + k) * 2];
          const std::int64_t* rhs =
              left ? &in[(k * r_ + j) * 2] : &gm[(k * r_ + j) * 2];
          // (a1 + b1 x)(a2 + b2 x) with x^2 = px + q
          acc_a += lhs[0] * rhs[0] + q_ * lhs[1] * rhs[1];
          acc_b += lhs[0] * rhs[1] + lhs[1] * rhs[0] + p_ * lhs[1] * rhs[1];
        }
        out[(i * r_ + j) * 2] = acc_a;
        out[(i * r_ + j) * 2 + 1] = acc_b;
      }
    }
  }

 private:
  int r_;
  std::int64_t p_ = 0, q_ = 0;
  std::vector<std::int64_t> gens_;
};

struct Realization {
  std::vector<std::unique_ptr<Factor>> factors;
  std::vector<std::size_t> offsets;
  std::size_t total_words = 0;
  std::vector<std::pair<int, int>> gen_map;  // global gen -> (factor, local)

  Realization(const CoxeterMatrix& m, const FiniteType& type) {
    gen_map.resize(static_cast<std::size_t>(m.rank()));
    for (const auto& f : type.factors) {
      std::unique_ptr<Factor> factor;
      switch (f.family) {
        case 'A':
          factor = std::make_unique<PermFactor>(f.rank + 1);
          break;
        case 'B':
          factor = std::make_unique<SignedPermFactor>(f.rank, false);
          break;
        case 'D':
          factor = std::make_unique<SignedPermFactor>(f.rank, true);
          break;
        case 'I':
          factor = std::make_unique<DihedralFactor>(f.dihedral_m);
          break;
        default:
          factor = std::make_unique<MatrixFactor>(m, f.nodes);
          break;
      }
      for (std::size_t k = 0; k < f.nodes.size(); ++k)
        gen_map[static_cast<std::size_t>(f.nodes[k])] = {
            static_cast<int>(factors.size()), static_cast<int>(k)};
      offsets.push_back(total_words);
      total_words += factor->words();
      factors.push_back(std::move(factor));
    }
  }

  void identity(std::int64_t* out) const {
    for (std::size_t i = 0; i < factors.size(); ++i)
      factors[i]->identity(out + offsets[i]);
  }
  void mul(const std::int64_t* in, int global_gen, bool left,
           std::int64_t* out) const {
    std::copy(in, in + total_words, out);
    const auto [fi, local] = gen_map[static_cast<std::size_t>(global_gen)];
    factors[static_cast<std::size_t>(fi)]->mul(in + offsets[static_cast<std::size_t>(fi)], local,
                                               left, out + offsets[static_cast<std::size_t>(fi)]);
  }
  void key(const std::int64_t* in, std::int64_t* out) const {
    for (std::size_t i = 0; i < factors.size(); ++i)
      factors[i]->key(in + offsets[i], out + offsets[i]);
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Group Group::build(const std::string& type_label, const BuildOptions& opts) {
  return build(matrix_from_type_label(type_label), opts);
}

Group Group::build(const CoxeterMatrix& matrix, const BuildOptions& opts) {
  Group g;
  g.matrix_ = matrix;
  g.type_ = classify(matrix);
  g.rank_ = matrix.rank();
  const std::uint64_t predicted = g.type_.order();
  if (predicted > opts.element_cap)
    throw ResourceLimitError("group of type " + g.type_.name() + " has " +
                             std::to_string(predicted) +
                             " elements, above the cap of " +
                             std::to_string(opts.element_cap));

  const auto n = static_cast<std::size_t>(g.rank_);
  const auto N = static_cast<std::size_t>(predicted);
  g.order_ = static_cast<std::uint32_t>(N);

  const Realization real(matrix, g.type_);
  const std::size_t tw = real.total_words;

  std::vector<std::int64_t> states(N * std::max<std::size_t>(tw, 1));
  std::unordered_map<std::vector<std::int64_t>, std::uint32_t, KeyHash> index;
  index.reserve(N * 2);

  std::vector<std::int64_t> keybuf(tw), statebuf(tw);
  real.identity(states.data());
  real.key(states.data(), keybuf.data());
  index.emplace(keybuf, 0);

  g.right_.assign(n * N, 0);
  g.left_.assign(n * N, 0);
  g.length_.assign(N, 0);
  g.parent_.assign(N, {0, 0});

  std::uint32_t produced = 1;
  for (std::uint32_t id = 0; id < produced; ++id) {
    for (std::size_t s = 0; s < n; ++s) {
      real.mul(&states[id * tw], static_cast<int>(s), false, statebuf.data());
      real.key(statebuf.data(), keybuf.data());
      auto [it, inserted] = index.emplace(keybuf, produced);
      if (inserted) {
        if (produced >= N)
          throw OrderMismatchError(
              "enumeration of " + g.type_.name() + " exceeded the " +
              "classification order " + std::to_string(predicted));
        std::copy(statebuf.begin(), statebuf.end(), &states[produced * tw]);
        g.length_[produced] = g.length_[id] + 1;
        g.parent_[produced] = {id, static_cast<std::uint8_t>(s)};
        ++produced;
      }
      g.right_[s * N + id] = it->second;
    }
  }
  if (produced != N)
    throw OrderMismatchError("enumeration of " + g.type_.name() + " found " +
                             std::to_string(produced) + " elements, expected " +
                             std::to_string(predicted));

  for (std::uint32_t id = 0; id < N; ++id) {
    for (std::size_t s = 0; s < n; ++s) {
      real.mul(&states[id * tw], static_cast<int>(s), true, statebuf.data());
      real.key(statebuf.data(), keybuf.data());
      const auto it = index.find(keybuf);
      if (it == index.end())
        throw OrderMismatchError("left action left the enumerated set (" +
                                 g.type_.name() + ")");
      g.left_[s * N + id] = it->second;
    }
  }

  // One-line table for irreducible type A (I/O boundary notation).
  if (g.type_.factors.size() == 1 && g.type_.factors[0].family == 'A' &&
      g.rank_ >= 1) {
    // The realization slots follow the diagram path order, so states are
    // exactly the one-line values.
    g.one_line_.assign(N * (n + 1), 0);
    for (std::uint32_t id = 0; id < N; ++id)
      for (std::size_t k = 0; k <= n; ++k)
        g.one_line_[id * (n + 1) + k] =
            static_cast<std::uint8_t>(states[id * tw + k]);
  }

  index.clear();
  states.clear();
  states.shrink_to_fit();

  // Inverses via the BFS tree: (p*s)^-1 = s * p^-1.
  g.inverse_.assign(N, 0);
  for (std::uint32_t id = 1; id < N; ++id) {
    const auto [p, s] = g.parent_[id];
    g.inverse_[id] = g.left_[static_cast<std::size_t>(s) * N + g.inverse_[p]];
  }

  // Longest element: unique element in the top length layer.
  const std::uint32_t max_len = N ? g.length_[N - 1] : 0;
  std::size_t top_count = 0;
  for (std::uint32_t id = 0; id < N; ++id)
    if (g.length_[id] == max_len) ++top_count;
  if (N > 0 && top_count != 1)
    throw OrderMismatchError("longest element is not unique (" +
                             g.type_.name() + ")");
  g.longest_ = static_cast<std::uint32_t>(N - 1);

  // Descent masks.
  g.dleft_.assign(N, 0);
  g.dright_.assign(N, 0);
  for (std::uint32_t id = 0; id < N; ++id)
    for (std::size_t s = 0; s < n; ++s) {
      if (g.length_[g.left_[s * N + id]] < g.length_[id])
        g.dleft_[id] |= gen_bit(static_cast<int>(s));
      if (g.length_[g.right_[s * N + id]] < g.length_[id])
        g.dright_[id] |= gen_bit(static_cast<int>(s));
    }

  // Reflections: orbit of S under t -> s t s.
  {
    std::vector<bool> seen(N, false);
    std::vector<std::uint32_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
      const std::uint32_t t = g.right_[s * N + 0];
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
    std::vector<std::uint32_t> refl;
    while (!stack.empty()) {
      const std::uint32_t t = stack.back();
      stack.pop_back();
      refl.push_back(t);
      for (std::size_t s = 0; s < n; ++s) {
        const std::uint32_t c = g.left_[s * N + g.right_[s * N + t]];
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
      }
    }
    std::sort(refl.begin(), refl.end());
    g.reflections_.reserve(refl.size());
    g.refl_index_.assign(N, -1);
    for (std::size_t i = 0; i < refl.size(); ++i) {
      g.reflections_.push_back(Element{refl[i]});
      g.refl_index_[refl[i]] = static_cast<std::int32_t>(i);
    }
  }

  // Reflection action tables, composed from Cayley actions along words.
  const std::size_t nt = g.reflections_.size();
  g.refl_right_.assign(nt * N, 0);
  g.refl_left_.assign(nt * N, 0);
  for (std::size_t t = 0; t < nt; ++t) {
    const auto word = g.reduced_word(g.reflections_[t]);
    auto* rr = &g.refl_right_[t * N];
    for (std::uint32_t id = 0; id < N; ++id) rr[id] = id;
    for (const int a : word)
      for (std::uint32_t id = 0; id < N; ++id)
        rr[id] = g.right_[static_cast<std::size_t>(a) * N + rr[id]];
    auto* rl = &g.refl_left_[t * N];
    for (std::uint32_t id = 0; id < N; ++id) rl[id] = id;
    for (std::size_t i = word.size(); i-- > 0;)
      for (std::uint32_t id = 0; id < N; ++id)
        rl[id] = g.left_[static_cast<std::size_t>(word[i]) * N + rl[id]];
  }

  // Left inversion sets over reflection indices.
  g.invl_.assign(N, Bitset(nt));
  for (std::size_t t = 0; t < nt; ++t)
    for (std::uint32_t id = 0; id < N; ++id)
      if (g.length_[g.refl_left_[t * N + id]] < g.length_[id])
        g.invl_[id].set(t);

  // Bruhat covers and, at desk scale, the reachability matrix.
  g.cover_down_.assign(N, {});
  g.cover_up_.assign(N, {});
  for (std::uint32_t id = 0; id < N; ++id) {
    for (std::size_t t = 0; t < nt; ++t) {
      const std::uint32_t u = g.refl_left_[t * N + id];
      if (g.length_[u] + 1 == g.length_[id])
        g.cover_down_[id].push_back(Element{u});
      else if (g.length_[id] + 1 == g.length_[u])
        g.cover_up_[id].push_back(Element{u});
    }
    std::sort(g.cover_down_[id].begin(), g.cover_down_[id].end());
    std::sort(g.cover_up_[id].begin(), g.cover_up_[id].end());
  }
  if (N <= (1u << 16)) {
    g.bruhat_down_ = BitMatrix(N, N);
    for (std::uint32_t id = 0; id < N; ++id) {
      g.bruhat_down_.set(id, id);
      for (const Element v : g.cover_down_[id])
        g.bruhat_down_.or_row(id, v.id);
    }
  }

  // w0(I) per generator subset.
  if (g.rank_ <= 16) {
    g.longest_in_.assign(std::size_t{1} << g.rank_, 0);
    for (GenMask I = 1; I < (GenMask{1} << g.rank_); ++I) {
      std::uint32_t w = 0;
      for (;;) {
        std::uint32_t next = w;
        for_each_gen(I, [&](int s) {
          if (next == w &&
              g.length_[g.right_[static_cast<std::size_t>(s) * N + w]] >
                  g.length_[w])
            next = g.right_[static_cast<std::size_t>(s) * N + w];
        });
        if (next == w) break;
        w = next;
      }
      g.longest_in_[I] = w;
    }
  }

  return g;
}

Element Group::multiply(Element x, Element y) const {
  Element r = x;
  for (const int a : reduced_word(y)) r = right_mul(r, a);
  return r;
}

Element Group::longest_in(GenMask I) const {
  if (I == 0) return identity();
  if (!longest_in_.empty()) return Element{longest_in_[I]};
  Element w = identity();
  for (;;) {
    Element next = w;
    for_each_gen(I, [&](int s) {
      if (next == w && length(right_mul(w, s)) > length(w))
        next = right_mul(w, s);
    });
    if (next == w) return w;
    w = next;
  }
}

DescentData Group::descent_data(Element w) const {
  DescentData d;
  d.d_left = dleft_[w.id];
  d.d_right = dright_[w.id];
  d.a_left = all_gens() & ~d.d_left;
  d.a_right = all_gens() & ~d.d_right;
  for_each_gen(d.d_left, [&](int r) {
    const Element rw = left_mul(r, w);
    for_each_gen(d.d_right, [&](int s) {
      if (right_mul(w, s) == rw) {
        d.two_sided_pairs.emplace_back(r, s);
        d.d_left_large |= gen_bit(r);
        d.d_right_large |= gen_bit(s);
      }
    });
  });
  d.d_left_small = d.d_left & ~d.d_left_large;
  d.d_right_small = d.d_right & ~d.d_right_large;
  d.d_tilde = gen_count(d.d_left) + gen_count(d.d_right);
  d.d = gen_count(d.d_left_small) + gen_count(d.d_right_small) +
        static_cast<int>(d.two_sided_pairs.size());
  assert(gen_count(d.d_left_large) ==
         static_cast<int>(d.two_sided_pairs.size()));
  assert(gen_count(d.d_right_large) ==
         static_cast<int>(d.two_sided_pairs.size()));
  return d;
}

std::vector<Element> Group::inversions(Element w, Side side) const {
  std::vector<Element> out;
  const Bitset bits =
      side == Side::Left ? left_inversions(w) : right_inversions(w);
  bits.for_each_set([&](std::size_t t) {
    out.push_back(reflections_[t]);
  });
  return out;
}

std::vector<int> Group::reduced_word(Element w) const {
  std::vector<int> word;
  word.reserve(length_[w.id]);
  while (w.id != 0) {
    const GenMask dl = dleft_[w.id];
    const int s = std::countr_zero(dl);
    word.push_back(s);
    w = left_mul(s, w);
  }
  return word;
}

bool Group::bruhat_leq(Element u, Element w) const {
  if (length_[u.id] > length_[w.id]) return false;
  if (u == w) return true;
  if (!bruhat_down_.empty()) return bruhat_down_.test(w.id, u.id);
  // On-demand downward BFS from w, pruned by length.
  std::vector<bool> seen(order_, false);
  std::vector<Element> stack{w};
  seen[w.id] = true;
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (const Element v : cover_down_[x.id]) {
      if (seen[v.id]) continue;
      if (v == u) return true;
      seen[v.id] = true;
      if (length_[v.id] > length_[u.id]) stack.push_back(v);
    }
  }
  return false;
}

Bitset Group::bruhat_down_set(Element w) const {
  Bitset out(order_);
  if (!bruhat_down_.empty()) {
    bruhat_down_.for_each_set_in_row(w.id, [&](std::size_t v) { out.set(v); });
    return out;
  }
  std::vector<Element> stack{w};
  out.set(w.id);
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (const Element v : cover_down_[x.id])
      if (!out.test(v.id)) {
        out.set(v.id);
        stack.push_back(v);
      }
  }
  return out;
}

std::vector<int> Group::one_line(Element w) const {
  if (one_line_.empty())
    throw UnknownElementError(
        "one-line notation is only defined for irreducible type A groups");
  const auto n = static_cast<std::size_t>(rank_);
  std::vector<int> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    out[k] = one_line_[w.id * (n + 1) + k];
  return out;
}

std::string Group::word_name(Element w) const {
  if (w.id == 0) return "e";
  std::string out;
  for (const int a : reduced_word(w)) {
    if (!out.empty()) out += ".";
    out += "s" + std::to_string(a + 1);
  }
  return out;
}

std::string Group::display(Element w) const {
  if (!one_line_.empty()) {
    const auto ol = one_line(w);
    std::string out;
    const bool compact = rank_ + 1 <= 9;
    for (std::size_t i = 0; i < ol.size(); ++i) {
      if (!compact && i) out += ",";
      out += std::to_string(ol[i]);
    }
    return out;
  }
  return word_name(w);
}

Element Group::parse(const std::string& text) const {
  if (text.empty()) throw UnknownElementError("empty element notation");
  if (text == "e") return identity();
  // Dot-separated generator words ("s2.s1.s3" or bare indices "2.1.3");
  // anything else is one-line notation.
  const bool wordish =
      text.find('.') != std::string::npos || text[0] == 's';
  if (wordish) {
    Element w = identity();
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t dot = text.find('.', pos);
      if (dot == std::string::npos) dot = text.size();
      std::string tok = text.substr(pos, dot - pos);
      if (!tok.empty() && tok[0] == 's') tok = tok.substr(1);
      int s = 0;
      try {
        std::size_t used = 0;
        s = std::stoi(tok, &used);
        if (used != tok.size()) throw UnknownElementError("");
      } catch (...) {
        throw UnknownElementError("bad word token \"" +
                                  text.substr(pos, dot - pos) + "\" in \"" +
                                  text + "\"");
      }
      if (s < 1 || s > rank_)
        throw UnknownElementError("generator s" + std::to_string(s) +
                                  " out of range 1.." + std::to_string(rank_));
      w = right_mul(w, s - 1);
      pos = dot + 1;
    }
    return w;
  }
  // One-line notation.
  if (one_line_.empty())
    throw UnknownElementError(
        "one-line notation \"" + text +
        "\" is only accepted for irreducible type A groups; use s-words");
  const auto n = static_cast<std::size_t>(rank_);
  std::vector<int> vals;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t c = text.find(',', pos);
      if (c == std::string::npos) c = text.size();
      try {
        vals.push_back(std::stoi(text.substr(pos, c - pos)));
      } catch (...) {
        throw UnknownElementError("bad one-line notation \"" + text + "\"");
      }
      pos = c + 1;
    }
  } else {
    for (const char ch : text) {
      if (ch < '1' || ch > '9')
        throw UnknownElementError("bad one-line notation \"" + text + "\"");
      vals.push_back(ch - '0');
    }
  }
  if (vals.size() != n + 1)
    throw UnknownElementError("one-line notation \"" + text + "\" must list " +
                              std::to_string(n + 1) + " values");
  std::vector<bool> seen(n + 2, false);
  for (const int v : vals) {
    if (v < 1 || v > static_cast<int>(n + 1) || seen[static_cast<std::size_t>(v)])
      throw UnknownElementError("\"" + text + "\" is not a permutation of 1.." +
                                std::to_string(n + 1));
    seen[static_cast<std::size_t>(v)] = true;
  }
  // Peel right descents to build a reduced word, then multiply it back up.
  // Letters index the diagram path; map them back to global generators.
  const auto& path_nodes = type_.factors[0].nodes;
  std::vector<int> word;
  std::vector<int> p = vals;
  for (;;) {
    int s = -1;
    for (std::size_t i = 0; i + 1 <= n; ++i)
      if (p[i] > p[i + 1]) {
        s = static_cast<int>(i);
        break;
      }
    if (s < 0) break;
    std::swap(p[static_cast<std::size_t>(s)], p[static_cast<std::size_t>(s) + 1]);
    word.push_back(s);
  }
  Element w = identity();
  for (std::size_t i = word.size(); i-- > 0;)
    w = right_mul(w, path_nodes[static_cast<std::size_t>(word[i])]);
  return w;
}

}  // namespace coxeter
