#include "skbrace/brace.hpp"

#include <algorithm>  // for find
#include <random>     // for mt19937_64
#include <string>     // for to_string

#include "skbrace/error.hpp"

namespace skb {

  namespace {
    std::string subscript(std::size_t n) {
      static char const* digits[]
          = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
      std::string s;
      for (char c : std::to_string(n)) {
        s += digits[c - '0'];
      }
      return s;
    }

    std::string triple(Elem a, Elem b, Elem c) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ","
             + std::to_string(c) + ")";
    }

    // Runs pred over all triples (exhaustive, lexicographic) or over sampled
    // triples and returns the first failure.
    template <typename Pred>
    std::optional<std::array<Elem, 3>> first_bad_triple(std::size_t         n,
                                                        SweepOptions const& sweep,
                                                        bool&               sampled,
                                                        Pred const&         bad) {
      sampled = !sweep.exhaustive_for(n);
      if (!sampled) {
        return detail::find_first<std::array<Elem, 3>>(
            n, sweep.threads, [&](std::size_t a) -> std::optional<std::array<Elem, 3>> {
              for (Elem b = 0; b < n; ++b) {
                for (Elem c = 0; c < n; ++c) {
                  if (bad(static_cast<Elem>(a), b, c)) {
                    return std::array<Elem, 3>{static_cast<Elem>(a), b, c};
                  }
                }
              }
              return std::nullopt;
            });
      }
      std::mt19937_64                     rng(sweep.seed);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
      for (std::size_t i = 0; i < sweep.samples; ++i) {
        Elem a = pick(rng), b = pick(rng), c = pick(rng);
        if (bad(a, b, c)) {
          return std::array<Elem, 3>{a, b, c};
        }
      }
      return std::nullopt;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // OpTable
  ////////////////////////////////////////////////////////////////////////

  OpTable OpTable::raw(std::size_t n, std::vector<Elem> t, std::string label) {
    if (t.size() != n * n) {
      throw PreconditionError("operation table has the wrong size");
    }
    for (Elem x : t) {
      if (x >= n) {
        throw PreconditionError("operation table entry out of range");
      }
    }
    return OpTable(n, std::move(t), std::move(label));
  }

  std::optional<std::string> OpTable::group_defect(SweepOptions const& sweep) const {
    std::size_t const n = order_;
    if (n == 0) {
      return "empty carrier";
    }
    for (Elem g = 0; g < n; ++g) {
      if (op(0, g) != g || op(g, 0) != g) {
        return "0 is not an identity (fails at " + std::to_string(g) + ")";
      }
    }
    for (Elem g = 0; g < n; ++g) {
      bool found = false;
      for (Elem h = 0; h < n && !found; ++h) {
        found = op(g, h) == 0 && op(h, g) == 0;
      }
      if (!found) {
        return "element " + std::to_string(g) + " has no inverse";
      }
    }
    bool sampled = false;
    auto bad     = first_bad_triple(n, sweep, sampled, [&](Elem a, Elem b, Elem c) {
      return op(op(a, b), c) != op(a, op(b, c));
    });
    if (bad) {
      return "not associative at " + triple((*bad)[0], (*bad)[1], (*bad)[2]);
    }
    return std::nullopt;
  }

  OpTable OpTable::group(std::size_t         n,
                         std::vector<Elem>   t,
                         std::string         label,
                         SweepOptions const& sweep) {
    auto r = raw(n, std::move(t), std::move(label));
    if (auto d = r.group_defect(sweep)) {
      throw PreconditionError("table '" + r.label_ + "' is not a group: " + *d);
    }
    r.inverse_.resize(n);
    for (Elem g = 0; g < n; ++g) {
      for (Elem h = 0; h < n; ++h) {
        if (r.op(g, h) == 0) {
          r.inverse_[g] = h;
          break;
        }
      }
    }
    return r;
  }

  OpTable OpTable::of(FiniteGroup const& g, std::string label) {
    OpTable t(g.order(), std::vector<Elem>(g.table().begin(), g.table().end()),
              std::move(label));
    t.inverse_.resize(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      t.inverse_[x] = g.inv(x);
    }
    return t;
  }

  OpTable OpTable::relabeled(std::string label) const {
    OpTable t(*this);
    t.label_ = std::move(label);
    return t;
  }

  FiniteGroup OpTable::as_group(std::span<std::string const> names) const {
    if (!is_group()) {
      throw PreconditionError("table '" + label_ + "' is not a verified group");
    }
    FiniteGroup::Parts p;
    p.order = order_;
    p.mul   = table_;
    p.names.clear();
    for (std::size_t i = 0; i < order_; ++i) {
      p.names.push_back(names.size() == order_ ? names[i] : std::to_string(i));
    }
    // Generators: add the smallest element not yet generated.
    auto                     tmp = FiniteGroup::assemble(p);
    std::vector<std::uint8_t> covered(order_, 0);
    covered[0]        = 1;
    std::size_t count = 1;
    for (Elem x = 1; x < order_ && count < order_; ++x) {
      if (covered[x]) {
        continue;
      }
      p.generators.push_back(x);
      auto s = Subgroup::generated(tmp, p.generators);
      for (Elem m : s.members()) {
        covered[m] = 1;
      }
      count = s.order();
    }
    return FiniteGroup::assemble(std::move(p));
  }

  ////////////////////////////////////////////////////////////////////////
  // Braces
  ////////////////////////////////////////////////////////////////////////

  BraceReport verify_brace(OpTable const&      add,
                           OpTable const&      mul,
                           SweepOptions const& sweep) {
    if (add.order() != mul.order()) {
      throw PreconditionError("brace tables have different carriers");
    }
    if (!add.is_group() || !mul.is_group()) {
      throw PreconditionError("brace tables must be verified group tables");
    }
    BraceReport r;
    r.failure = first_bad_triple(add.order(), sweep, r.sampled, [&](Elem g, Elem h, Elem k) {
      return mul.op(g, add.op(h, k))
             != add.op(add.op(mul.op(g, h), add.inverse(g)), mul.op(g, k));
    });
    r.holds = !r.failure.has_value();
    return r;
  }

  SkewBrace SkewBrace::make(OpTable                 additive,
                            OpTable                 multiplicative,
                            std::optional<GroupMap> psi,
                            SweepOptions const&     sweep) {
    auto r = verify_brace(additive, multiplicative, sweep);
    if (!r.holds) {
      auto const& f = *r.failure;
      throw PreconditionError("(" + additive.label() + "," + multiplicative.label()
                              + ") violates the brace relation at "
                              + triple(f[0], f[1], f[2]));
    }
    return SkewBrace(std::move(additive), std::move(multiplicative), std::move(psi), r);
  }

  OpTable circle_table(FiniteGroup const&  g,
                       GroupMap const&     psi,
                       std::string         label,
                       SweepOptions const& sweep) {
    if (!psi.is_endomorphism() || !psi.is_abelian_map()) {
      throw PreconditionError("circle_table: psi is not in Ab(G)");
    }
    if (!(psi.domain() == g)) {
      throw PreconditionError("circle_table: psi is not a map on G");
    }
    std::size_t const n = g.order();
    std::vector<Elem> t(n * n);
    for (Elem a = 0; a < n; ++a) {
      Elem const left  = g.mul(a, psi(g.inv(a)));  // a psi(a^-1)
      Elem const right = psi(a);
      for (Elem b = 0; b < n; ++b) {
        t[a * n + b] = g.mul(left, g.mul(b, right));
      }
    }
    return detail::internal_guard("circle operation", [&] {
      return OpTable::group(n, std::move(t), std::move(label), sweep);
    });
  }

  Elem circle_inverse(FiniteGroup const& g, GroupMap const& psi, Elem x) {
    if (!psi.is_endomorphism() || !psi.is_abelian_map()) {
      throw PreconditionError("circle_inverse: psi is not in Ab(G)");
    }
    Elem const xbar = g.mul(psi(x), g.inv(x), psi(g.inv(x)));
    auto circ = [&](Elem a, Elem b) {
      return g.mul(g.mul(a, psi(g.inv(a))), g.mul(b, psi(a)));
    };
    if (circ(x, xbar) != 0 || circ(xbar, x) != 0) {
      throw InternalError("circle inverse formula failed for element "
                          + std::to_string(x));
    }
    return xbar;
  }

  OpTable opposite_table(OpTable const& t) {
    std::size_t const n = t.order();
    std::vector<Elem> out(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        out[a * n + b] = t.op(b, a);
      }
    }
    std::string label = t.label();
    // A second prime cancels the first.
    std::string const prime = "′";
    if (label.size() >= prime.size()
        && label.compare(label.size() - prime.size(), prime.size(), prime) == 0) {
      label.resize(label.size() - prime.size());
    } else {
      label += prime;
    }
    if (!t.is_group()) {
      return OpTable::raw(n, std::move(out), std::move(label));
    }
    return detail::internal_guard("opposite table", [&] {
      return OpTable::group(n, std::move(out), std::move(label));
    });
  }

  SkewBrace brace_from_map(FiniteGroup const&  g,
                           GroupMap const&     psi,
                           SweepOptions const& sweep) {
    auto circ = circle_table(g, psi, "∘", sweep);
    return detail::internal_guard("brace (·,∘)", [&] {
      return SkewBrace::make(OpTable::of(g), std::move(circ), psi, sweep);
    });
  }

  std::vector<std::vector<Elem>> gamma_family(SkewBrace const& b) {
    auto const&                    A = b.additive();
    auto const&                    M = b.multiplicative();
    std::size_t const              n = b.order();
    std::vector<std::vector<Elem>> gamma(n, std::vector<Elem>(n));
    for (Elem g = 0; g < n; ++g) {
      for (Elem h = 0; h < n; ++h) {
        gamma[g][h] = A.op(A.inverse(g), M.op(g, h));
      }
    }
    for (Elem g = 0; g < n; ++g) {
      std::vector<std::uint8_t> hit(n, 0);
      for (Elem h = 0; h < n; ++h) {
        if (hit[gamma[g][h]]++) {
          throw InternalError("gamma(" + std::to_string(g) + ") is not a bijection");
        }
      }
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (gamma[g][A.op(x, y)] != A.op(gamma[g][x], gamma[g][y])) {
            throw InternalError("gamma(" + std::to_string(g)
                                + ") is not an additive automorphism");
          }
        }
      }
    }
    for (Elem g = 0; g < n; ++g) {
      for (Elem h = 0; h < n; ++h) {
        auto const& gh = gamma[M.op(g, h)];
        for (Elem x = 0; x < n; ++x) {
          if (gh[x] != gamma[g][gamma[h][x]]) {
            throw InternalError("gamma is not a homomorphism at "
                                + triple(g, h, x));
          }
        }
      }
    }
    return gamma;
  }

  std::vector<OpTable> brace_block(GroupMap const&     psi,
                                   std::size_t         n,
                                   std::size_t         bound,
                                   SweepOptions const& sweep) {
    if (n > bound) {
      throw PreconditionError("brace_block: N = " + std::to_string(n)
                              + " exceeds the bound " + std::to_string(bound));
    }
    auto const&          G = psi.domain();
    std::vector<OpTable> tables;
    for (std::size_t k = 0; k <= n; ++k) {
      auto psik = psi_iterate(psi, k);
      tables.push_back(circle_table(G, psik, "∘" + subscript(k), sweep));
    }
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; b <= n; ++b) {
        auto r = verify_brace(tables[a], tables[b], sweep);
        if (!r.holds) {
          throw InternalError("(" + tables[a].label() + "," + tables[b].label()
                              + ") is not a brace");
        }
      }
    }
    return tables;
  }

  SkewBrace quotient_brace(SkewBrace const&      b,
                           std::span<Elem const> members,
                           SweepOptions const&   sweep) {
    auto const&       A = b.additive();
    auto const&       M = b.multiplicative();
    std::size_t const n = b.order();
    std::vector<std::uint8_t> in(n, 0);
    for (Elem h : members) {
      if (h >= n) {
        throw PreconditionError("quotient_brace: element out of range");
      }
      in[h] = 1;
    }
    if (!in[0]) {
      throw PreconditionError("quotient_brace: H does not contain the identity");
    }
    for (Elem x : members) {
      for (Elem y : members) {
        if (!in[A.op(x, y)]) {
          throw PreconditionError("quotient_brace: H is not an additive subgroup");
        }
      }
    }
    constexpr Elem    kNone = static_cast<Elem>(-1);
    std::vector<Elem> coset(n, kNone), reps;
    for (Elem x = 0; x < n; ++x) {
      if (coset[x] != kNone) {
        continue;
      }
      auto id = static_cast<Elem>(reps.size());
      reps.push_back(x);
      for (Elem h : members) {
        coset[A.op(x, h)] = id;
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem h : members) {
        if (coset[M.op(x, h)] != coset[x]) {
          throw PreconditionError(
              "quotient_brace: additive and multiplicative cosets differ");
        }
      }
    }
    std::size_t const q = reps.size();
    auto induced        = [&](OpTable const& t) {
      std::vector<Elem> out(q * q);
      for (Elem i = 0; i < q; ++i) {
        for (Elem j = 0; j < q; ++j) {
          out[i * q + j] = coset[t.op(reps[i], reps[j])];
        }
      }
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (coset[t.op(x, y)] != out[coset[x] * q + coset[y]]) {
            throw PreconditionError("quotient_brace: operation '" + t.label()
                                    + "' is not well defined on cosets");
          }
        }
      }
      return out;
    };
    auto ta = induced(A);
    auto tm = induced(M);
    // Well-defined quotients of groups are groups.
    auto qa = detail::internal_guard("quotient additive group", [&] {
      return OpTable::group(q, std::move(ta), A.label(), sweep);
    });
    auto qm = detail::internal_guard("quotient multiplicative group", [&] {
      return OpTable::group(q, std::move(tm), M.label(), sweep);
    });
    return detail::internal_guard("quotient brace", [&] {
      return SkewBrace::make(std::move(qa), std::move(qm), std::nullopt, sweep);
    });
  }

}  // namespace skb
