#include <lvcert/pipeline/pipeline.hpp>

#include <lvcert/graph/canon.hpp>
#include <lvcert/localview/catalogue_io.hpp>
#include <lvcert/oracle/oracles.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace lvcert {

bool SelfcheckReport::ok() const
{
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.ok; });
}

namespace {

SmallGraph random_graph(std::mt19937& rng, int n)
{
    SmallGraph g(n);
    std::uniform_int_distribution<int> role(0, 2);
    const Role roles[] = {Role::Plain, Role::Neighbour, Role::Boundary};
    for (int v = 0; v < n; ++v)
        g.set_role(v, roles[role(rng)]);
    std::bernoulli_distribution edge(0.45);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng))
                g.add_edge(a, b);
    return g;
}

SmallGraph random_role_relabel(std::mt19937& rng, const SmallGraph& g)
{
    std::vector<int> image(g.size());
    for (Role r : {Role::Centre, Role::Neighbour, Role::Boundary, Role::Colour, Role::Plain}) {
        std::vector<int> members;
        for (int v = 0; v < g.size(); ++v)
            if (g.role(v) == r)
                members.push_back(v);
        auto shuffled = members;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (std::size_t i = 0; i < members.size(); ++i)
            image[members[i]] = shuffled[i];
    }
    return g.relabelled(image);
}

SelfcheckItem check_canon()
{
    std::mt19937 rng(20240611);
    int mismatches = 0, graphs = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 6;
        auto g = random_graph(rng, n);
        auto h = random_role_relabel(rng, g);
        auto other = random_graph(rng, n);
        ++graphs;
        if (canonical_form(g) != canonical_form(h))
            ++mismatches;
        if (aut_group(g).order() != oracle::brute_aut_order(g))
            ++mismatches;
        if (g.role_string() == other.role_string()) {
            bool kernel_iso = canonical_form(g) == canonical_form(other);
            bool rf_iso = oracle::rf_canonical_form(g) == oracle::rf_canonical_form(other);
            if (kernel_iso != rf_iso)
                ++mismatches;
        }
    }
    return {"canonical labelling vs exhaustive search (n <= 7)", mismatches == 0,
            std::to_string(graphs) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

SelfcheckItem check_inner_graphs()
{
    std::string detail;
    bool ok = true;
    for (int d = 1; d <= 5; ++d) {
        auto generated = generate_inner_graphs(d).size();
        auto brute = oracle::brute_inner_graphs(d, oracle::rf_canonical_form).size();
        ok = ok && generated == brute;
        detail += "d=" + std::to_string(d) + ":" + std::to_string(generated) + "/" + std::to_string(brute) + " ";
    }
    return {"inner graphs vs brute force", ok, detail};
}

SelfcheckItem check_catalogue(int d, const oracle::CanonFn& canon, const std::string& canon_name)
{
    auto cat = generate_catalogue(d);
    std::set<SmallGraph> generated;
    for (const auto& v : cat.views)
        generated.insert(canon(v.rep));
    auto brute = oracle::brute_catalogue_forms(d, canon);
    bool ok = generated.size() == cat.views.size() && std::set<SmallGraph>(brute.begin(), brute.end()) == generated;
    return {"catalogue d=" + std::to_string(d) + " vs brute force (" + canon_name + ")", ok,
            std::to_string(cat.views.size()) + " generated, " + std::to_string(brute.size()) + " brute"};
}

SelfcheckItem check_coefficients(const Catalogue& cat)
{
    const int q = 7;
    const Rational t0(1, 2);
    int checked = 0, mismatches = 0;
    auto parts = partitions_of(cat.d);
    for (std::size_t i = 0; i < cat.views.size() && checked < 24; i += 149) {
        const auto& view = cat.views[i];
        if (view.colour_count > q)
            continue;
        auto direct = oracle::direct_coefficients(view, q, t0);
        for (auto spec : {CaseSpec::min_qge6(), CaseSpec::max_qge5()}) {
            auto rec = coefficient_vectors(view, spec);
            Rational r0 = spec.r_for_q(q);
            bool same = rec.ztilde.eval(t0, r0) == direct.ztilde && rec.c().eval(t0, r0) == direct.c;
            for (std::size_t s = 0; s < parts.size(); ++s)
                same = same && rec.gamma(s).eval(t0, r0) == direct.gamma[s];
            if (!same)
                ++mismatches;
        }
        ++checked;
    }
    return {"symbolic coefficients vs direct summation (q = 7, t0 = 1/2)", mismatches == 0 && checked > 0,
            std::to_string(checked) + " views, " + std::to_string(mismatches) + " mismatches"};
}

SelfcheckItem check_feasibility(const Catalogue& cat)
{
    bool ok = true;
    std::string detail;
    for (auto spec : {CaseSpec::min_q5(), CaseSpec::min_qge6()}) {
        std::vector<CoeffRecord> records(cat.views.size());
        for (int id : k44_support_views(cat))
            records[id] = coefficient_vectors(cat.views[id], spec, id);
        auto feas = check_k44_feasibility(cat, records, reference_model(ReferenceGraph::K44, spec));
        ok = ok && feas.ok;
        detail += spec.name() + (feas.ok ? ":holds " : ":VIOLATED ");
    }
    return {"K44 feasibility identity", ok, detail};
}

SelfcheckItem check_reference()
{
    const Rational t0(1, 2);
    bool ok = true;
    for (auto graph : {ReferenceGraph::K5, ReferenceGraph::K44}) {
        auto ref = reference_model(graph, CaseSpec::min_q5());
        ok = ok && ref.u.eval(t0, 0) == oracle::direct_internal_energy(reference_graph(graph), 5, t0);
    }
    return {"reference internal energies vs direct summation (q = 5)", ok, ""};
}

SelfcheckItem check_magic()
{
    bool loads = true;
    for (auto kind : {CaseKind::MinQ5, CaseKind::MinQGe6, CaseKind::MaxQGe5}) {
        try {
            magic_factor(kind);
        }
        catch (const MagicFactorError&) {
            loads = false;
        }
    }
    std::string flipped(magic_factor_text(CaseKind::MinQ5));
    flipped.replace(flipped.find("+660 t"), 6, "-660 t");
    bool rejected = false;
    try {
        load_magic_factor(CaseKind::MinQ5, flipped);
    }
    catch (const MagicFactorError&) {
        rejected = true;
    }
    return {"magic factors load; sign-flipped factor rejected", loads && rejected, ""};
}

SelfcheckItem check_catalogue_hash(const Catalogue& cat)
{
    std::ostringstream out;
    write_catalogue(out, cat);
    std::string text = out.str();
    auto pos = text.find("mults: [1");
    text[pos + 8] = '2';
    bool rejected = false;
    try {
        std::istringstream in(text);
        read_catalogue(in);
    }
    catch (const CatalogueError&) {
        rejected = true;
    }
    return {"corrupted catalogue rejected by hash", rejected, ""};
}

}  // namespace

SelfcheckReport run_selfcheck(int jobs, const Logger& log)
{
    SelfcheckReport report;
    auto add = [&](SelfcheckItem item) {
        if (log)
            log(std::string(item.ok ? "PASS " : "FAIL ") + item.name + (item.detail.empty() ? "" : ": " + item.detail));
        report.items.push_back(std::move(item));
    };
    add(check_canon());
    add(check_inner_graphs());
    add(check_catalogue(2, oracle::rf_canonical_form, "Read-Faradzev dedupe"));
    add(check_catalogue(2, canonical_form, "refinement dedupe"));
    add(check_catalogue(3, canonical_form, "refinement dedupe"));
    if (log)
        log("generating the d=4 catalogue for coefficient checks");
    auto cat4 = generate_catalogue(4, jobs);
    add(check_coefficients(cat4));
    add(check_feasibility(cat4));
    add(check_reference());
    add(check_magic());
    add(check_catalogue_hash(cat4));
    return report;
}

}  // namespace lvcert
