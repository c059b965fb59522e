#include "cherednik/rewriting.hpp"

#include <map>
#include <random>

#include "cherednik/errors.hpp"

namespace cherednik {
namespace {

enum class Letter : int { X = 0, G = 1, D = 2 };

struct Symbol {
  Letter kind;
  int index;
  auto operator<=>(const Symbol&) const = default;
};

using Word = std::vector<Symbol>;
using Combination = std::map<Word, ExactScalar>;

void add_word(Combination& c, const Word& w, const ExactScalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c.emplace(w, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

Combination expand(const ExprPtr& e) {
  Combination out;
  switch (e->kind()) {
    case Expr::Kind::Scalar: add_word(out, {}, e->value()); break;
    case Expr::Kind::X: add_word(out, {{Letter::X, e->index()}}, 1); break;
    case Expr::Kind::Xi: add_word(out, {{Letter::D, e->index()}}, 1); break;
    case Expr::Kind::Group: add_word(out, {{Letter::G, e->index()}}, 1); break;
    case Expr::Kind::Sum:
      for (const auto& c : e->children())
        for (const auto& [w, v] : expand(c)) add_word(out, w, v);
      break;
    case Expr::Kind::Product: {
      add_word(out, {}, 1);
      for (const auto& c : e->children()) {
        Combination next;
        const Combination rhs = expand(c);
        for (const auto& [w1, v1] : out)
          for (const auto& [w2, v2] : rhs) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            add_word(next, w, v1 * v2);
          }
        out = std::move(next);
      }
      break;
    }
  }
  return out;
}

}  // namespace

WordRewriter::WordRewriter(const CherednikAlgebra& algebra, Strategy strategy, std::uint64_t seed)
    : algebra_(&algebra), strategy_(strategy), seed_(seed) {}

AlgebraElement WordRewriter::rewrite(const ExprPtr& e) const {
  const ReflectionGroup& g = algebra_->group();
  const int n = algebra_->rank();
  std::mt19937_64 rng(seed_);
  steps_ = 0;

  auto redex = [&](const Word& w, std::size_t p) {
    if (w[p].kind == Letter::G && w[p].index == ReflectionGroup::identity()) return true;
    if (p + 1 >= w.size()) return false;
    const Symbol& a = w[p];
    const Symbol& b = w[p + 1];
    if (a.kind > b.kind) return true;
    if (a.kind == b.kind) return a.kind == Letter::G || a.index > b.index;
    return false;
  };

  Combination pending = expand(e);
  Combination done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word word = std::move(node.key());
    const ExactScalar coeff = std::move(node.mapped());
    std::vector<std::size_t> positions;
    for (std::size_t p = 0; p < word.size(); ++p)
      if (redex(word, p)) positions.push_back(p);
    if (positions.empty()) {
      add_word(done, word, coeff);
      continue;
    }
    ++steps_;
    std::size_t p = positions.back();
    if (strategy_ == Strategy::Random)
      p = positions[std::uniform_int_distribution<std::size_t>(0, positions.size() - 1)(rng)];

    const Word prefix(word.begin(), word.begin() + p);
    auto emit = [&](const Word& middle, std::size_t consumed, const ExactScalar& c) {
      if (c.is_zero()) return;
      Word w = prefix;
      w.insert(w.end(), middle.begin(), middle.end());
      w.insert(w.end(), word.begin() + p + consumed, word.end());
      add_word(pending, w, coeff * c);
    };

    const Symbol a = word[p];
    if (a.kind == Letter::G && a.index == ReflectionGroup::identity()) {
      emit({}, 1, 1);
      continue;
    }
    const Symbol b = word[p + 1];
    if (a.kind == b.kind && a.kind != Letter::G) {
      emit({b, a}, 2, 1);
    } else if (a.kind == Letter::G && b.kind == Letter::G) {
      emit({{Letter::G, g.mul(a.index, b.index)}}, 2, 1);
    } else if (a.kind == Letter::G && b.kind == Letter::X) {
      // w x_i w^{-1} = w . x_i
      const ExactMatrix& d = g.dual_matrix(a.index);
      for (int j = 0; j < n; ++j) emit({{Letter::X, j}, a}, 2, d(j, b.index));
    } else if (a.kind == Letter::D && b.kind == Letter::G) {
      // xi_i w = w (w^{-1} . xi_i)
      const ExactMatrix& m = g.matrix(g.inverse(b.index));
      for (int j = 0; j < n; ++j) emit({b, {Letter::D, j}}, 2, m(j, a.index));
    } else if (a.kind == Letter::D && b.kind == Letter::X) {
      emit({b, a}, 2, 1);
      const GroupAlgebraElement& c = algebra_->commutator_coefficient(a.index, b.index);
      for (std::size_t w = 0; w < c.coeffs.size(); ++w)
        emit({{Letter::G, static_cast<int>(w)}}, 2, c.coeffs[w]);
    } else {
      throw Error("rewriter reached an unexpected letter pair");
    }
  }

  AlgebraElement out;
  for (const auto& [word, c] : done) {
    PbwKey key{Exponent(n, 0), ReflectionGroup::identity(), Exponent(n, 0)};
    for (const auto& s : word) {
      if (s.kind == Letter::X) ++key.x[s.index];
      else if (s.kind == Letter::D) ++key.xi[s.index];
      else key.w = s.index;
    }
    out.add_term(key, c);
  }
  return out;
}

}  // namespace cherednik
