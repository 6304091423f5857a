#include "skbrace/ideals.hpp"

#include <algorithm>  // for find, sort, unique
#include <string>     // for string

#include "skbrace/error.hpp"

namespace skb {

  namespace {
    bool closed_under(OpTable const& t, Subgroup const& h) {
      for (Elem a : h.members()) {
        for (Elem b : h.members()) {
          if (!h.contains(t.op(a, b))) {
            return false;
          }
        }
      }
      return true;
    }

    // Requires closure; g h g^-1 in H for all g.
    bool normal_in(OpTable const& t, Subgroup const& h) {
      for (Elem g = 0; g < t.order(); ++g) {
        for (Elem m : h.members()) {
          if (!h.contains(t.op(t.op(g, m), t.inverse(g)))) {
            return false;
          }
        }
      }
      return true;
    }

    std::string describe(Subgroup const& h) {
      std::string s = "{";
      for (Elem m : h.members()) {
        s += (s.size() > 1 ? "," : "") + h.parent().name(m);
      }
      return s + "}";
    }
  }  // namespace

  std::string_view label(BraceKind k) noexcept {
    switch (k) {
      case BraceKind::circ_dot:
        return "(∘,·)";
      case BraceKind::circop_dot:
        return "(∘′,·)";
      case BraceKind::dot_circ:
        return "(·,∘)";
      case BraceKind::dotop_circ:
        return "(·′,∘)";
      case BraceKind::dot_circop:
        return "(·,∘′)";
    }
    return "";
  }

  std::optional<BraceKind> parse_brace_kind(std::string_view s) {
    std::string t(s);
    for (auto pos = t.find('\''); pos != std::string::npos; pos = t.find('\'')) {
      t.replace(pos, 1, "′");
    }
    for (BraceKind k : all_brace_kinds) {
      if (label(k) == t) {
        return k;
      }
    }
    return std::nullopt;
  }

  bool IdealVerdict::is_strong_left_ideal_of(BraceKind k) const noexcept {
    return std::find(strong_left_ideal_of.begin(), strong_left_ideal_of.end(), k)
           != strong_left_ideal_of.end();
  }

  bool IdealVerdict::is_ideal_of(BraceKind k) const noexcept {
    return std::find(ideal_of.begin(), ideal_of.end(), k) != ideal_of.end();
  }

  IdealClassifier::IdealClassifier(GroupMap psi)
      : psi_(std::move(psi)),
        phi_([this] {
          auto p = phi_of(psi_);
          return std::vector<Elem>(p.values().begin(), p.values().end());
        }()),
        dot_(OpTable::of(psi_.domain())),
        dotop_(opposite_table(dot_)),
        circ_(circle_table(psi_.domain(), psi_)),
        circop_(opposite_table(circ_)) {}

  std::pair<OpTable const&, OpTable const&>
  IdealClassifier::tables(BraceKind k) const noexcept {
    switch (k) {
      case BraceKind::circ_dot:
        return {circ_, dot_};
      case BraceKind::circop_dot:
        return {circop_, dot_};
      case BraceKind::dot_circ:
        return {dot_, circ_};
      case BraceKind::dotop_circ:
        return {dotop_, circ_};
      case BraceKind::dot_circop:
        break;
    }
    return {dot_, circop_};
  }

  bool IdealClassifier::c1(Subgroup const& h) const {
    std::vector<Elem> s;
    s.reserve(h.order());
    for (Elem m : h.members()) {
      s.push_back(phi_[m]);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return commutator_condition(group(), s, h);
  }

  bool IdealClassifier::c2(Subgroup const& h) const {
    return is_normal(group(), h);
  }

  bool IdealClassifier::is_strong_left_ideal(BraceKind k, Subgroup const& h) const {
    auto [A, M] = tables(k);
    if (!closed_under(M, h) || !closed_under(A, h) || !normal_in(A, h)) {
      return false;
    }
    for (Elem g = 0; g < A.order(); ++g) {
      Elem const ginv = A.inverse(g);
      for (Elem m : h.members()) {
        if (!h.contains(A.op(ginv, M.op(g, m)))) {
          return false;
        }
      }
    }
    return true;
  }

  bool IdealClassifier::is_ideal(BraceKind k, Subgroup const& h) const {
    return is_strong_left_ideal(k, h) && normal_in(tables(k).second, h);
  }

  IdealVerdict IdealClassifier::classify(Subgroup const& h) const {
    if (!(h.parent() == group())) {
      throw PreconditionError("classify: H is not a subgroup of the domain of psi");
    }
    IdealVerdict v{h, c1(h), c2(h), {}, {}};
    auto const sli_predicted = [&](BraceKind k) {
      switch (k) {
        case BraceKind::circ_dot:
        case BraceKind::circop_dot:
          return v.c1;
        case BraceKind::dot_circ:
        case BraceKind::dotop_circ:
          return v.c2;
        default:
          return false;
      }
    };
    for (BraceKind k : {BraceKind::circ_dot,
                        BraceKind::circop_dot,
                        BraceKind::dot_circ,
                        BraceKind::dotop_circ}) {
      bool const direct = is_strong_left_ideal(k, h);
      if (direct != sli_predicted(k)) {
        throw InternalError("strong left ideal test for " + describe(h) + " in "
                            + std::string(label(k)) + " disagrees with C1/C2 (C1="
                            + (v.c1 ? "true" : "false") + ", C2="
                            + (v.c2 ? "true" : "false") + ")");
      }
      if (direct) {
        v.strong_left_ideal_of.push_back(k);
      }
    }
    for (BraceKind k :
         {BraceKind::dot_circ, BraceKind::dot_circop, BraceKind::circop_dot}) {
      bool const direct = is_ideal(k, h);
      if (direct != (v.c1 && v.c2)) {
        throw InternalError("ideal test for " + describe(h) + " in "
                            + std::string(label(k)) + " disagrees with C1 and C2");
      }
      if (direct) {
        v.ideal_of.push_back(k);
      }
    }
    return v;
  }

  IdealVerdict classify_subgroup(GroupMap const& psi, Subgroup const& h) {
    return IdealClassifier(psi).classify(h);
  }

  NamedSubgroups named_subgroups(GroupMap const& psi) {
    if (!psi.is_endomorphism() || !psi.is_abelian_map()) {
      throw PreconditionError("named_subgroups: psi is not in Ab(G)");
    }
    auto const& G   = psi.domain();
    auto        an  = map_analysis(psi);
    auto        phi = phi_of(psi);
    auto        z   = center(G);
    std::vector<Elem> hh;
    for (Elem g = 0; g < G.order(); ++g) {
      if (z.contains(phi(g))) {
        hh.push_back(g);
      }
    }
    auto h_hat = detail::internal_guard(
        "h_hat", [&] { return Subgroup::from_members(G, std::move(hh)); });
    if (!an.fix->is_subset_of(h_hat)) {
      throw InternalError("fix psi is not contained in h_hat");
    }
    return {std::move(an.kernel), std::move(*an.fix), std::move(h_hat)};
  }

  Subgroup ker_times(GroupMap const& psi, Subgroup const& h1) {
    auto const& G   = psi.domain();
    auto        fix = fixed_subgroup(psi);
    if (!(h1.parent() == G) || !h1.is_subset_of(fix)) {
      throw PreconditionError("ker_times: H1 is not contained in fix psi");
    }
    auto              ker = map_analysis(psi).kernel;
    std::vector<Elem> prod;
    prod.reserve(ker.order() * h1.order());
    for (Elem k : ker.members()) {
      for (Elem h : h1.members()) {
        prod.push_back(G.mul(k, h));
      }
    }
    std::sort(prod.begin(), prod.end());
    prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
    return detail::internal_guard(
        "ker psi . H1", [&] { return Subgroup::from_members(G, std::move(prod)); });
  }

  std::vector<Subgroup> ker_times_all(GroupMap const& psi, EnumerationLimits const& lim) {
    auto const&           G   = psi.domain();
    auto                  fix = fixed_subgroup(psi);
    std::vector<Subgroup> out;
    for (auto const& s : enumerate_subgroups(fix.as_group(), lim)) {
      std::vector<Elem> members;
      for (Elem m : s.members()) {
        members.push_back(fix.members()[m]);
      }
      out.push_back(ker_times(psi, Subgroup::from_members(G, std::move(members))));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<IdealVerdict> find_strong_left_ideals(GroupMap const&          psi,
                                                    std::size_t              max_order,
                                                    EnumerationLimits const& lim) {
    if (psi.domain().order() > max_order) {
      throw PreconditionError("find_strong_left_ideals: |G| = "
                              + std::to_string(psi.domain().order())
                              + " exceeds the limit " + std::to_string(max_order));
    }
    IdealClassifier           c(psi);
    auto                      subs = enumerate_subgroups(psi.domain(), lim);
    std::vector<IdealVerdict> out;
    out.reserve(subs.size());
    for (auto const& h : subs) {
      out.push_back(c.classify(h));
    }
    return out;
  }

}  // namespace skb
