#include "skbrace/group.hpp"

#include <algorithm>      // for sort, unique, next_permutation
#include <numeric>        // for iota
#include <random>         // for mt19937_64, uniform_int_distribution
#include <string>         // for string, to_string
#include <unordered_set>  // for unordered_set
#include <utility>        // for move

#include "skbrace/error.hpp"

namespace skb {

  namespace {
    std::string power_name(std::string const& sym, std::size_t i) {
      if (i == 0) {
        return "e";
      }
      if (i == 1) {
        return sym;
      }
      return sym + "^" + std::to_string(i);
    }

    void check_order_cap(std::size_t order, GroupOptions const& opts) {
      if (order > opts.max_order) {
        throw PreconditionError("group order " + std::to_string(order)
                                + " exceeds the configured cap "
                                + std::to_string(opts.max_order));
      }
    }

    std::vector<Elem> compute_inverses(std::size_t              n,
                                       std::vector<Elem> const& mul) {
      std::vector<Elem> inv(n, static_cast<Elem>(n));
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
          if (mul[g * n + h] == 0) {
            inv[g] = static_cast<Elem>(h);
            break;
          }
        }
      }
      return inv;
    }

    // Names for product-like groups: juxtapose the names of non-identity
    // coordinates ("r^2su"), falling back to tuples when that collides.
    std::vector<std::string>
    coordinate_names(std::size_t                                   order,
                     std::vector<std::vector<std::string>> const&  parts) {
      std::vector<std::string>        names(order);
      std::unordered_set<std::string> seen;
      bool                            distinct = true;
      for (std::size_t g = 0; g < order; ++g) {
        std::string s;
        for (auto const& p : parts[g]) {
          if (p != "e") {
            s += p;
          }
        }
        if (s.empty()) {
          s = "e";
        }
        if (!seen.insert(s).second) {
          distinct = false;
        }
        names[g] = std::move(s);
      }
      if (!distinct) {
        for (std::size_t g = 0; g < order; ++g) {
          std::string s = "(";
          for (std::size_t i = 0; i < parts[g].size(); ++i) {
            s += (i ? "," : "") + parts[g][i];
          }
          names[g] = s + ")";
        }
      }
      return names;
    }

    void check_names(std::vector<std::string> const& names, std::size_t n) {
      if (names.size() != n) {
        throw PreconditionError("expected " + std::to_string(n)
                                + " element names, got "
                                + std::to_string(names.size()));
      }
      std::unordered_set<std::string> seen(names.begin(), names.end());
      if (seen.size() != names.size()) {
        throw PreconditionError("element names are not pairwise distinct");
      }
    }

    // Generating set built by adding the smallest element not yet covered.
    std::vector<Elem> greedy_generators(FiniteGroup const& g) {
      std::vector<Elem>         gens;
      std::vector<std::uint8_t> covered(g.order(), 0);
      covered[0]        = 1;
      std::size_t count = 1;
      for (Elem x = 1; x < g.order() && count < g.order(); ++x) {
        if (covered[x]) {
          continue;
        }
        gens.push_back(x);
        auto s = Subgroup::generated(g, gens);
        for (Elem m : s.members()) {
          covered[m] = 1;
        }
        count = s.order();
      }
      return gens;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup::FiniteGroup() : FiniteGroup(assemble(Parts{})) {}

  FiniteGroup FiniteGroup::assemble(Parts p) {
    auto d        = std::make_shared<Data>();
    d->order      = p.order;
    d->mul        = std::move(p.mul);
    d->inv        = compute_inverses(p.order, d->mul);
    d->names      = std::move(p.names);
    d->generators = std::move(p.generators);
    d->structure  = p.structure;
    d->factors    = std::move(p.factors);
    d->abelian    = true;
    for (std::size_t a = 0; a < p.order && d->abelian; ++a) {
      for (std::size_t b = a + 1; b < p.order; ++b) {
        if (d->mul[a * p.order + b] != d->mul[b * p.order + a]) {
          d->abelian = false;
          break;
        }
      }
    }
    return FiniteGroup(std::move(d));
  }

  FiniteGroup FiniteGroup::from_table(std::size_t              n,
                                      std::vector<Elem>        mul,
                                      std::vector<std::string> names,
                                      std::vector<Elem>        generators,
                                      GroupOptions const&      opts) {
    if (n == 0) {
      throw PreconditionError("a group table must have at least one element");
    }
    check_order_cap(n, opts);
    if (mul.size() != n * n) {
      throw PreconditionError("table has " + std::to_string(mul.size())
                              + " entries, expected "
                              + std::to_string(n * n));
    }
    for (Elem x : mul) {
      if (x >= n) {
        throw PreconditionError("table entry " + std::to_string(x)
                                + " out of range");
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (mul[g] != g || mul[g * n] != g) {
        throw PreconditionError("element 0 is not an identity (fails at "
                                + std::to_string(g) + ")");
      }
    }
    auto inv = compute_inverses(n, mul);
    for (std::size_t g = 0; g < n; ++g) {
      if (inv[g] == n || mul[inv[g] * n + g] != 0) {
        throw PreconditionError("element " + std::to_string(g)
                                + " has no two-sided inverse");
      }
    }
    auto assoc_fails = [&](std::size_t a, std::size_t b, std::size_t c) {
      return mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]];
    };
    if (n <= opts.associativity_cap) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (assoc_fails(a, b, c)) {
              throw PreconditionError(
                  "table is not associative at (" + std::to_string(a) + ","
                  + std::to_string(b) + "," + std::to_string(c) + ")");
            }
          }
        }
      }
    } else {
      std::mt19937_64                            rng(opts.seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t i = 0; i < opts.associativity_samples; ++i) {
        std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        if (assoc_fails(a, b, c)) {
          throw PreconditionError(
              "table is not associative at (" + std::to_string(a) + ","
              + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
    if (names.empty()) {
      names.emplace_back("e");
      for (std::size_t g = 1; g < n; ++g) {
        names.push_back("x" + std::to_string(g));
      }
    }
    check_names(names, n);
    for (Elem x : generators) {
      if (x >= n) {
        throw PreconditionError("generator index out of range");
      }
    }
    Parts p;
    p.order      = n;
    p.mul        = std::move(mul);
    p.names      = std::move(names);
    p.generators = generators;
    auto result  = assemble(std::move(p));
    if (generators.empty()) {
      auto gens = greedy_generators(result);
      Parts q;
      q.order      = n;
      q.mul        = std::vector<Elem>(result.table().begin(),
                                result.table().end());
      q.names      = std::vector<std::string>(result.names().begin(),
                                         result.names().end());
      q.generators = std::move(gens);
      return assemble(std::move(q));
    }
    if (Subgroup::generated(result, generators).order() != n) {
      throw PreconditionError("the supplied generators do not generate the group");
    }
    return result;
  }

  Elem FiniteGroup::power(Elem g, long long k) const {
    Elem base = g;
    if (k < 0) {
      base = inv(g);
      k    = -k;
    }
    Elem r = 0;
    while (k > 0) {
      if (k & 1) {
        r = mul(r, base);
      }
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  std::size_t FiniteGroup::element_order(Elem g) const {
    std::size_t k = 1;
    for (Elem x = g; x != 0; x = mul(x, g)) {
      ++k;
    }
    return k;
  }

  std::optional<Elem> FiniteGroup::find(std::string_view name) const {
    auto const& n  = data_->names;
    auto        it = std::find(n.begin(), n.end(), name);
    if (it == n.end()) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - n.begin());
  }

  Elem FiniteGroup::at(std::string_view name) const {
    if (auto g = find(name)) {
      return *g;
    }
    // Bare indices are accepted as well.
    if (!name.empty()
        && std::all_of(name.begin(), name.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      auto v = std::stoull(std::string(name));
      if (v < order()) {
        return static_cast<Elem>(v);
      }
    }
    throw PreconditionError("unknown element '" + std::string(name) + "'");
  }

  std::vector<Elem> FiniteGroup::coordinates(Elem g) const {
    std::vector<Elem> out;
    for (auto const& f : data_->factors) {
      out.push_back(static_cast<Elem>(g % f.order()));
      g = static_cast<Elem>(g / f.order());
    }
    return out;
  }

  Elem FiniteGroup::from_coordinates(std::span<Elem const> coords) const {
    auto const& fs = data_->factors;
    if (coords.size() != fs.size()) {
      throw PreconditionError("wrong number of coordinates");
    }
    std::size_t idx = 0;
    for (std::size_t i = fs.size(); i-- > 0;) {
      if (coords[i] >= fs[i].order()) {
        throw PreconditionError("coordinate out of range");
      }
      idx = idx * fs[i].order() + coords[i];
    }
    return static_cast<Elem>(idx);
  }

  std::vector<Elem> FiniteGroup::all_elements() const {
    std::vector<Elem> v(order());
    std::iota(v.begin(), v.end(), Elem{0});
    return v;
  }

  bool operator==(FiniteGroup const& a, FiniteGroup const& b) noexcept {
    return a.data_ == b.data_
           || (a.data_->order == b.data_->order && a.data_->mul == b.data_->mul);
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  namespace groups {

    FiniteGroup cyclic(std::size_t n, std::string symbol) {
      if (n == 0) {
        throw PreconditionError("cyclic group of order 0");
      }
      FiniteGroup::Parts p;
      p.order = n;
      p.mul.resize(n * n);
      p.names.clear();
      for (std::size_t i = 0; i < n; ++i) {
        p.names.push_back(power_name(symbol, i));
        for (std::size_t j = 0; j < n; ++j) {
          p.mul[i * n + j] = static_cast<Elem>((i + j) % n);
        }
      }
      if (n > 1) {
        p.generators = {1};
      }
      return FiniteGroup::assemble(std::move(p));
    }

    FiniteGroup dihedral(std::size_t n, std::string r, std::string s) {
      if (n < 1) {
        throw PreconditionError("dihedral group needs n >= 1");
      }
      std::size_t const  N = 2 * n;
      FiniteGroup::Parts p;
      p.order = N;
      p.mul.resize(N * N);
      p.names.clear();
      // index a + n b  <->  r^a s^b
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t a = 0; a < n; ++a) {
          std::string nm = a == 0 ? "" : power_name(r, a);
          if (b == 1) {
            nm += s;
          }
          p.names.push_back(nm.empty() ? "e" : nm);
        }
      }
      for (std::size_t x = 0; x < N; ++x) {
        std::size_t a1 = x % n, b1 = x / n;
        for (std::size_t y = 0; y < N; ++y) {
          std::size_t a2 = y % n, b2 = y / n;
          // r^a1 s^b1 r^a2 s^b2 = r^(a1 + (-1)^b1 a2) s^(b1 + b2)
          std::size_t a = b1 == 0 ? (a1 + a2) % n : (a1 + n - a2) % n;
          p.mul[x * N + y] = static_cast<Elem>(a + n * ((b1 + b2) % 2));
        }
      }
      if (n == 1) {
        p.generators = {1};
      } else {
        p.generators = {1, static_cast<Elem>(n)};
      }
      return FiniteGroup::assemble(std::move(p));
    }

    Elem permutation_rank(std::span<Elem const> perm) {
      std::size_t const n    = perm.size();
      std::size_t       rank = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
          smaller += perm[j] < perm[i];
        }
        rank = rank * (n - i) + smaller;
      }
      return static_cast<Elem>(rank);
    }

    std::vector<Elem> permutation_unrank(std::size_t n, Elem rank) {
      std::vector<std::size_t> digits(n);
      std::size_t              r = rank;
      for (std::size_t i = n; i-- > 0;) {
        std::size_t base = n - i;
        digits[i]        = r % base;
        r /= base;
      }
      std::vector<Elem> pool(n);
      std::iota(pool.begin(), pool.end(), Elem{0});
      std::vector<Elem> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(pool[digits[i]]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
      }
      return out;
    }

    FiniteGroup symmetric(std::size_t n, GroupOptions const& opts) {
      std::size_t order = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        order *= i;
        check_order_cap(order, opts);
      }
      std::vector<std::vector<Elem>> perms;
      std::vector<Elem>              p(n);
      std::iota(p.begin(), p.end(), Elem{0});
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));

      FiniteGroup::Parts parts;
      parts.order = order;
      parts.mul.resize(order * order);
      parts.names.clear();
      std::vector<Elem> c(n);
      for (std::size_t a = 0; a < order; ++a) {
        std::string nm = "[";
        for (std::size_t i = 0; i < n; ++i) {
          if (n >= 10 && i > 0) {
            nm += ",";
          }
          nm += std::to_string(perms[a][i] + 1);
        }
        parts.names.push_back(nm + "]");
        for (std::size_t b = 0; b < order; ++b) {
          for (std::size_t i = 0; i < n; ++i) {
            c[i] = perms[a][perms[b][i]];
          }
          parts.mul[a * order + b] = permutation_rank(c);
        }
      }
      if (n >= 2) {
        std::vector<Elem> t(n), cyc(n);
        std::iota(t.begin(), t.end(), Elem{0});
        std::swap(t[0], t[1]);
        for (std::size_t i = 0; i < n; ++i) {
          cyc[i] = static_cast<Elem>((i + 1) % n);
        }
        parts.generators.push_back(permutation_rank(t));
        if (n > 2) {
          parts.generators.push_back(permutation_rank(cyc));
        }
      }
      return FiniteGroup::assemble(std::move(parts));
    }

    FiniteGroup direct_product(std::span<FiniteGroup const> factors,
                               GroupOptions const&          opts) {
      if (factors.empty()) {
        return FiniteGroup();
      }
      std::size_t order = 1;
      for (auto const& f : factors) {
        order *= f.order();
        check_order_cap(order, opts);
      }
      std::size_t const k = factors.size();
      auto decompose      = [&](std::size_t g, std::vector<Elem>& out) {
        for (std::size_t i = 0; i < k; ++i) {
          out[i] = static_cast<Elem>(g % factors[i].order());
          g /= factors[i].order();
        }
      };
      auto compose = [&](std::vector<Elem> const& c) {
        std::size_t idx = 0;
        for (std::size_t i = k; i-- > 0;) {
          idx = idx * factors[i].order() + c[i];
        }
        return static_cast<Elem>(idx);
      };
      FiniteGroup::Parts p;
      p.order = order;
      p.mul.resize(order * order);
      std::vector<Elem>                     cx(k), cy(k), cz(k);
      std::vector<std::vector<std::string>> parts(order);
      for (std::size_t x = 0; x < order; ++x) {
        decompose(x, cx);
        for (std::size_t i = 0; i < k; ++i) {
          parts[x].push_back(factors[i].name(cx[i]));
        }
        for (std::size_t y = 0; y < order; ++y) {
          decompose(y, cy);
          for (std::size_t i = 0; i < k; ++i) {
            cz[i] = factors[i].mul(cx[i], cy[i]);
          }
          p.mul[x * order + y] = compose(cz);
        }
      }
      p.names = coordinate_names(order, parts);
      std::vector<Elem> c(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (Elem gen : factors[i].generators()) {
          c[i] = gen;
          p.generators.push_back(compose(c));
        }
        c[i] = 0;
      }
      p.structure = Structure::direct_product;
      p.factors.assign(factors.begin(), factors.end());
      return FiniteGroup::assemble(std::move(p));
    }

    FiniteGroup direct_product(FiniteGroup const&  a,
                               FiniteGroup const&  b,
                               GroupOptions const& opts) {
      std::vector<FiniteGroup> f{a, b};
      return direct_product(f, opts);
    }

    FiniteGroup semidirect_product(FiniteGroup const&                    base,
                                   FiniteGroup const&                    acting,
                                   std::vector<std::vector<Elem>> const& action,
                                   GroupOptions const&                   opts) {
      std::size_t const nb = base.order(), na = acting.order();
      check_order_cap(nb * na, opts);
      if (action.size() != na) {
        throw PreconditionError("semidirect action needs one automorphism per "
                                "acting element");
      }
      for (std::size_t k = 0; k < na; ++k) {
        auto const& th = action[k];
        if (th.size() != nb) {
          throw PreconditionError("automorphism " + std::to_string(k)
                                  + " has the wrong length");
        }
        std::vector<std::uint8_t> hit(nb, 0);
        for (Elem x : th) {
          if (x >= nb || hit[x]) {
            throw PreconditionError("action of acting element "
                                    + std::to_string(k)
                                    + " is not a bijection of the base");
          }
          hit[x] = 1;
        }
        for (Elem a = 0; a < nb; ++a) {
          for (Elem b = 0; b < nb; ++b) {
            if (th[base.mul(a, b)] != base.mul(th[a], th[b])) {
              throw PreconditionError("action of acting element "
                                      + std::to_string(k)
                                      + " is not an automorphism of the base");
            }
          }
        }
      }
      for (Elem a = 0; a < nb; ++a) {
        if (action[0][a] != a) {
          throw PreconditionError("the identity must act trivially");
        }
      }
      for (Elem k1 = 0; k1 < na; ++k1) {
        for (Elem k2 = 0; k2 < na; ++k2) {
          auto const& t12 = action[acting.mul(k1, k2)];
          for (Elem a = 0; a < nb; ++a) {
            if (t12[a] != action[k1][action[k2][a]]) {
              throw PreconditionError(
                  "action is not a homomorphism from the acting group");
            }
          }
        }
      }
      std::size_t const  order = nb * na;
      FiniteGroup::Parts p;
      p.order = order;
      p.mul.resize(order * order);
      std::vector<std::vector<std::string>> parts(order);
      for (std::size_t x = 0; x < order; ++x) {
        Elem n1 = static_cast<Elem>(x % nb), k1 = static_cast<Elem>(x / nb);
        parts[x] = {base.name(n1), acting.name(k1)};
        for (std::size_t y = 0; y < order; ++y) {
          Elem n2 = static_cast<Elem>(y % nb), k2 = static_cast<Elem>(y / nb);
          Elem n  = base.mul(n1, action[k1][n2]);
          Elem k  = acting.mul(k1, k2);
          p.mul[x * order + y] = static_cast<Elem>(n + nb * k);
        }
      }
      p.names = coordinate_names(order, parts);
      for (Elem g : base.generators()) {
        p.generators.push_back(g);
      }
      for (Elem g : acting.generators()) {
        p.generators.push_back(static_cast<Elem>(nb * g));
      }
      p.structure = Structure::semidirect_product;
      p.factors   = {base, acting};
      return FiniteGroup::assemble(std::move(p));
    }

    namespace {
      FiniteGroup rename(FiniteGroup const&       g,
                         std::vector<std::string> names) {
        check_names(names, g.order());
        FiniteGroup::Parts p;
        p.order = g.order();
        p.mul.assign(g.table().begin(), g.table().end());
        p.names = std::move(names);
        p.generators.assign(g.generators().begin(), g.generators().end());
        p.structure = g.structure();
        p.factors.assign(g.factors().begin(), g.factors().end());
        return FiniteGroup::assemble(std::move(p));
      }
    }  // namespace

    FiniteGroup build(GroupSpec const& spec, GroupOptions const& opts) {
      using K = GroupSpec::Kind;
      FiniteGroup g;
      switch (spec.kind) {
        case K::cyclic:
          check_order_cap(spec.n, opts);
          g = cyclic(spec.n, spec.symbols.empty() ? "g" : spec.symbols[0]);
          break;
        case K::dihedral:
          check_order_cap(2 * spec.n, opts);
          g = dihedral(spec.n,
                       spec.symbols.size() > 0 ? spec.symbols[0] : "r",
                       spec.symbols.size() > 1 ? spec.symbols[1] : "s");
          break;
        case K::symmetric:
          g = symmetric(spec.n, opts);
          break;
        case K::product: {
          std::vector<FiniteGroup> fs;
          for (auto const& f : spec.factors) {
            fs.push_back(build(f, opts));
          }
          g = direct_product(fs, opts);
          break;
        }
        case K::semidirect:
          if (spec.factors.size() != 2) {
            throw PreconditionError("semidirect spec needs base and acting");
          }
          g = semidirect_product(build(spec.factors[0], opts),
                                 build(spec.factors[1], opts),
                                 spec.action,
                                 opts);
          break;
        case K::table: {
          std::size_t const n = spec.mul.size();
          check_order_cap(n, opts);
          std::vector<Elem> flat;
          flat.reserve(n * n);
          for (auto const& row : spec.mul) {
            if (row.size() != n) {
              throw PreconditionError("table rows must all have length "
                                      + std::to_string(n));
            }
            flat.insert(flat.end(), row.begin(), row.end());
          }
          return FiniteGroup::from_table(
              n, std::move(flat), spec.names, spec.generators, opts);
        }
      }
      if (!spec.names.empty()) {
        g = rename(g, spec.names);
      }
      return g;
    }

  }  // namespace groups

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  Subgroup Subgroup::generated(FiniteGroup const& g, std::span<Elem const> gens) {
    std::vector<Elem> kept;
    for (Elem x : gens) {
      if (x >= g.order()) {
        throw PreconditionError("element index " + std::to_string(x)
                                + " out of range");
      }
      if (x != 0 && std::find(kept.begin(), kept.end(), x) == kept.end()) {
        kept.push_back(x);
      }
    }
    std::vector<std::uint8_t> flag(g.order(), 0);
    std::vector<Elem>         members{0};
    flag[0] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Elem s : kept) {
        Elem y = g.mul(members[i], s);
        if (!flag[y]) {
          flag[y] = 1;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return Subgroup(g, std::move(members), std::move(kept), std::move(flag));
  }

  Subgroup Subgroup::from_members(FiniteGroup const& g, std::vector<Elem> m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    std::vector<std::uint8_t> flag(g.order(), 0);
    for (Elem x : m) {
      if (x >= g.order()) {
        throw PreconditionError("element index out of range");
      }
      flag[x] = 1;
    }
    if (m.empty() || m[0] != 0) {
      throw PreconditionError("subset does not contain the identity");
    }
    for (Elem a : m) {
      for (Elem b : m) {
        if (!flag[g.mul(a, b)]) {
          throw PreconditionError("subset is not closed under multiplication");
        }
      }
    }
    if (g.order() % m.size() != 0) {
      throw InternalError("subgroup order does not divide the group order");
    }
    std::vector<Elem> gens(m.begin() + 1, m.end());
    return Subgroup(g, std::move(m), std::move(gens), std::move(flag));
  }

  Subgroup Subgroup::trivial(FiniteGroup const& g) {
    return generated(g, {});
  }

  Subgroup Subgroup::whole(FiniteGroup const& g) {
    return generated(g, g.generators());
  }

  bool Subgroup::is_subset_of(Subgroup const& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](Elem x) {
      return other.contains(x);
    });
  }

  Elem Subgroup::local_index(Elem g) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), g);
    if (it == members_.end() || *it != g) {
      throw PreconditionError("element is not a member of the subgroup");
    }
    return static_cast<Elem>(it - members_.begin());
  }

  FiniteGroup Subgroup::as_group() const {
    std::size_t const  n = order();
    FiniteGroup::Parts p;
    p.order = n;
    p.mul.resize(n * n);
    p.names.clear();
    for (std::size_t i = 0; i < n; ++i) {
      p.names.push_back(parent_.name(members_[i]));
      for (std::size_t j = 0; j < n; ++j) {
        p.mul[i * n + j] = local_index(parent_.mul(members_[i], members_[j]));
      }
    }
    for (Elem g : gens_) {
      p.generators.push_back(local_index(g));
    }
    return FiniteGroup::assemble(std::move(p));
  }

  namespace {
    struct VecHash {
      std::size_t operator()(std::vector<Elem> const& v) const noexcept {
        std::size_t h = v.size();
        for (Elem x : v) {
          h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace

  std::vector<Subgroup> enumerate_subgroups(FiniteGroup const&       g,
                                            EnumerationLimits const& lim) {
    std::vector<Subgroup>                                  found;
    std::unordered_set<std::vector<Elem>, VecHash>         seen;
    std::size_t                                            closures = 0;
    found.push_back(Subgroup::trivial(g));
    seen.emplace(found.back().members().begin(), found.back().members().end());
    for (std::size_t i = 0; i < found.size(); ++i) {
      // <H, x> = <H, xh>, so one element per left coset suffices.
      auto const        cosets = coset_space(g, found[i]);
      std::vector<Elem> gens(found[i].generators().begin(),
                             found[i].generators().end());
      for (Elem rep : cosets.representatives) {
        if (rep == 0) {
          continue;
        }
        if (++closures > lim.max_closures) {
          throw PreconditionError("subgroup enumeration exceeded the limit of "
                                  + std::to_string(lim.max_closures)
                                  + " closures");
        }
        gens.push_back(rep);
        auto k = Subgroup::generated(g, gens);
        gens.pop_back();
        if (lim.order_divides != 0 && lim.order_divides % k.order() != 0) {
          continue;
        }
        std::vector<Elem> key(k.members().begin(), k.members().end());
        if (seen.insert(std::move(key)).second) {
          found.push_back(std::move(k));
        }
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  bool is_normal(FiniteGroup const& g, Subgroup const& h) {
    for (Elem x : g.generators()) {
      for (Elem m : h.members()) {
        if (!h.contains(g.conj(x, m))) {
          return false;
        }
      }
    }
    if (g.generators().empty() && g.order() > 1) {
      for (Elem x = 0; x < g.order(); ++x) {
        for (Elem m : h.members()) {
          if (!h.contains(g.conj(x, m))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Subgroup center(FiniteGroup const& g) {
    std::vector<Elem> z;
    for (Elem a = 0; a < g.order(); ++a) {
      bool central = true;
      for (Elem b = 0; b < g.order() && central; ++b) {
        central = g.mul(a, b) == g.mul(b, a);
      }
      if (central) {
        z.push_back(a);
      }
    }
    return Subgroup::from_members(g, std::move(z));
  }

  bool commutator_condition(FiniteGroup const&    g,
                            std::span<Elem const> s,
                            Subgroup const&       h) {
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y : s) {
        if (!h.contains(g.commutator(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  CosetSpace coset_space(FiniteGroup const& g, Subgroup const& h) {
    CosetSpace cs{g, h, std::vector<Elem>(g.order(), static_cast<Elem>(-1)), {}};
    for (Elem x = 0; x < g.order(); ++x) {
      if (cs.coset_of[x] != static_cast<Elem>(-1)) {
        continue;
      }
      auto const id = static_cast<Elem>(cs.representatives.size());
      cs.representatives.push_back(x);
      for (Elem m : h.members()) {
        cs.coset_of[g.mul(x, m)] = id;
      }
    }
    return cs;
  }

}  // namespace skb
