#include "permcheck/survey.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace permcheck {

namespace {

std::string subgroup_desc(const GroupTable& g, const Bitset& members) {
  std::string out = "{";
  bool first = true;
  members.for_each([&](int i) {
    if (!first) out += ", ";
    out += cycle_string(g.element(i));
    first = false;
  });
  return out + "}";
}

}  // namespace

std::vector<AuditViolation> audit_group(const GroupTable& g, const Lattice& lattice,
                                        const ClassificationReport& report,
                                        const std::string& name, const Caps& caps) {
  std::vector<AuditViolation> out;
  auto flag = [&](const std::string& rule, std::string detail) {
    out.push_back({rule, name, std::move(detail)});
  };
  const int n = lattice.size();

  std::vector<char> permutable(n), sqn4_flag(n);

  for (int i = 0; i < n; ++i) {
    const SubgroupSet& h = lattice.subgroup(i);
    if (g.order() % h.size() != 0)
      flag("lagrange", "subgroup of size " + std::to_string(h.size()) + " in group of order " +
                           std::to_string(g.order()));

    bool perm_all = true, sqn4_all = true;
    for (int j = 0; j < n; ++j) {
      const SubgroupSet& k = lattice.subgroup(j);

      ElementSet hk = product_set(g, h.members(), k.members());
      int inter = (h.members() & k.members()).count();
      if (hk.size() * inter != h.size() * k.size())
        flag("product-formula", "|HK| = " + std::to_string(hk.size()) + " for |H| = " +
                                    std::to_string(h.size()) + ", |K| = " + std::to_string(k.size()) +
                                    ", |H meet K| = " + std::to_string(inter));

      Perm4Verdict v = perm4(g, h, k);
      if (!v.product.members.subset_of(v.join.members()))
        flag("hkhk-in-join", "HKHK escapes <H,K> for H = " + subgroup_desc(g, h.members()) +
                                 ", K = " + subgroup_desc(g, k.members()));

      bool hk_eq_kh = permutes(g, h, k);
      if (hk_eq_kh && !v.holds)
        flag("permutable-implies-sqn4",
             "HK = KH but <H,K> != HKHK for H = " + subgroup_desc(g, h.members()) +
                 ", K = " + subgroup_desc(g, k.members()));

      perm_all = perm_all && hk_eq_kh;
      sqn4_all = sqn4_all && v.holds;

      // Commutator facts.
      SubgroupSet comm = commutator_subgroup(g, h, k);
      if (j >= i) {
        SubgroupSet comm_rev = commutator_subgroup(g, k, h);
        if (!(comm.members() == comm_rev.members()))
          flag("lemma-1.2", "[H,K] != [K,H] for H = " + subgroup_desc(g, h.members()) +
                                ", K = " + subgroup_desc(g, k.members()));
      }
      bool comm_normal_in_join = true;
      v.join.members().for_each([&](int t) {
        comm.members().for_each([&](int x) {
          comm_normal_in_join = comm_normal_in_join && comm.contains(g.conjugate(x, t));
        });
      });
      if (!comm_normal_in_join)
        flag("lemma-1.1", "[H,K] not normal in <H,K> for H = " + subgroup_desc(g, h.members()) +
                              ", K = " + subgroup_desc(g, k.members()));

      bool comm_in_k = comm.members().subset_of(k.members());
      bool h_normalizes_k = true;
      h.members().for_each([&](int t) {
        k.members().for_each([&](int x) {
          h_normalizes_k = h_normalizes_k && k.contains(g.conjugate(x, t));
        });
      });
      if (comm_in_k != h_normalizes_k)
        flag("lemma-1.3", "([H,K] <= K) <=> (H normalizes K) fails for H = " +
                              subgroup_desc(g, h.members()) + ", K = " + subgroup_desc(g, k.members()));
    }
    permutable[i] = perm_all;
    sqn4_flag[i] = sqn4_all;

    if (perm_all && !sqn4_all)
      flag("permutable-implies-sqn4",
           "permutable subgroup not sqn4: " + subgroup_desc(g, h.members()));
    if (perm_all && !is_subnormal(g, h))
      flag("ore-subnormal", "permutable subgroup not subnormal: " + subgroup_desc(g, h.members()));
  }

  // Restriction: H sqn4 G implies H sqn4 K for every K sitting between.
  for (int ki = 0; ki < n; ++ki) {
    const SubgroupSet& mid = lattice.subgroup(ki);
    if (mid.size() == 1 || mid.size() == g.order()) continue;  // both directions trivial
    std::vector<int> inside;
    for (int hi = 0; hi < n; ++hi)
      if (sqn4_flag[hi] && hi != ki && lattice.subgroup(hi).members().subset_of(mid.members()))
        inside.push_back(hi);
    if (inside.empty()) continue;

    SubgroupTable st = subgroup_table(g, mid);
    Lattice inner = all_subgroups(st.group(), st.group().order());
    for (int hi : inside) {
      Bitset local = st.lower(lattice.subgroup(hi).members());
      SubgroupSet h_local = SubgroupSet::from_closed_bitset(st.group(), local);
      if (!is_sqn4(st.group(), h_local, inner).holds)
        flag("lemma-2", "H sqn4 G but not sqn4 in K for H = " +
                            subgroup_desc(g, lattice.subgroup(hi).members()) +
                            ", K = " + subgroup_desc(g, mid.members()));
    }
  }

  // Quotient preservation: H sqn4 G and N <= H normal in G imply
  // H/N sqn4 G/N.
  for (int ni = 0; ni < n; ++ni) {
    if (!lattice.normal(ni)) continue;
    const SubgroupSet& kernel = lattice.subgroup(ni);
    if (kernel.size() == g.order()) continue;
    QuotientMap q = quotient(g, kernel);
    Lattice qlat = all_subgroups(q.group(), caps.max_lattice_order);
    for (int hi = 0; hi < n; ++hi) {
      if (!sqn4_flag[hi]) continue;
      if (!kernel.members().subset_of(lattice.subgroup(hi).members())) continue;
      SubgroupSet image = q.image(lattice.subgroup(hi));
      if (!is_sqn4(q.group(), image, qlat).holds)
        flag("lemma-3", "H sqn4 G but H/N not sqn4 in G/N for H = " +
                            subgroup_desc(g, lattice.subgroup(hi).members()) +
                            ", N = " + subgroup_desc(g, kernel.members()));
    }
  }

  if (report.sq4t && !report.solvable)
    flag("theorem-a", "Sq4T group is not solvable");

  // Subgroup closure of the Sq4T class.
  if (report.sq4t) {
    for (int i = 0; i < n; ++i) {
      const SubgroupSet& s = lattice.subgroup(i);
      if (s.size() == 1 || s.size() == g.order()) continue;
      SubgroupTable st = subgroup_table(g, s);
      Lattice inner = all_subgroups(st.group(), st.group().order());
      if (!is_sq4t_group(st.group(), inner).holds)
        flag("proposition-1",
             "subgroup of Sq4T group is not Sq4T: " + subgroup_desc(g, s.members()));
    }
  }

  return out;
}

SurveyResult run_survey(const SurveyOptions& options) {
  std::vector<GroupSpec> specs = survey_corpus(options.max_order);
  SurveyResult result;
  result.max_order = options.max_order;
  result.rows.resize(specs.size());
  std::vector<std::vector<AuditViolation>> per_group(specs.size());

  auto process = [&](std::size_t i) {
    SurveyRow& row = result.rows[i];
    row.name = specs[i].name;
    try {
      GroupTable g = build(specs[i], options.caps);
      row.order = g.order();
      Lattice lat = all_subgroups(g, options.caps.max_lattice_order);
      row.report = classify(g, specs[i].name, options.caps);
      if (options.run_audits)
        per_group[i] = audit_group(g, lat, *row.report, specs[i].name, options.caps);
    } catch (const CapExceeded& e) {
      row.error = e.what();
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  std::size_t jobs = options.jobs > 0 ? static_cast<std::size_t>(options.jobs)
                                      : std::max(1u, hw);
  jobs = std::min(jobs, specs.size());

  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) {
          try {
            process(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (auto& v : per_group)
    result.violations.insert(result.violations.end(), v.begin(), v.end());
  return result;
}

}  // namespace permcheck
