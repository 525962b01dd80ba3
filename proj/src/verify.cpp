#include "pianocat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "pianocat/chi.hpp"
#include "pianocat/dissection.hpp"
#include "pianocat/generators.hpp"
#include "pianocat/io.hpp"
#include "pianocat/quiver.hpp"

namespace pianocat {

const std::vector<std::string> kCheckNames{"bijection", "path-algebra-iso", "piano-as-paths",
                                           "beta-delta", "derived-equiv",    "confluence"};

json CheckResult::summary() const {
    json j{{"check", check},         {"n", n},
           {"pass", pass()},         {"instances", instances},
           {"checked", checked},     {"failures", failures}};
    for (auto &[k, v] : extra.items()) j[k] = v;
    return j;
}

namespace {

struct Partial {
    long checked = 0;
    long failures = 0;
    std::vector<json> witnesses;
    std::map<std::string, long> counters;
    void fail(json w) {
        ++failures;
        witnesses.push_back(std::move(w));
    }
};

// results come back in input order whatever the scheduling
std::vector<Partial> parallel_map(size_t count, const std::function<Partial(size_t)> &f) {
    std::vector<Partial> out(count);
    std::atomic<size_t> next{0};
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), count));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (size_t k; (k = next++) < count;) out[k] = f(k);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto &t : pool) t.join();
    }
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<int> flatten(const std::vector<std::vector<int>> &m) {
    std::vector<int> v;
    for (auto &r : m) v.insert(v.end(), r.begin(), r.end());
    return v;
}

Partial bijection_one(const ArcSet &G) {
    Partial p;
    int n = G.n;
    auto D = epsilon(G);
    ++p.checked;
    if (!is_extended_admissible(D)) p.fail({{"generator", to_json(G)}, {"reason", "image not extended admissible"}});
    ++p.checked;
    if (!(epsilon_inverse(D) == G)) p.fail({{"generator", to_json(G)}, {"reason", "epsilon_inverse(epsilon(G)) != G"}});
    ++p.checked;
    if ((int)D.red.size() != admissible_arc_count(n, 0, 1, 0) ||
        (int)(D.red.size() + D.binding.size()) != extended_arc_count(2 * n, 0, 0, 1, 0))
        p.fail({{"generator", to_json(G)}, {"reason", "arc count"}});
    return p;
}

Partial iso_one(const ArcSet &G, const CheckOptions &opt) {
    Partial p;
    auto r = verify_path_algebra_iso(G, opt.window);
    p.checked = r.checked;
    for (auto &m : r.mismatches) p.fail({{"generator", to_json(G)}, {"what", m.what}, {"witness", m.witness}});
    return p;
}

Partial paths_one(const ArcSet &G, const CheckOptions &opt) {
    Partial p;
    auto P = piano_from_generator(G);
    bool literal_ok = true;
    for (long i = -opt.window; i <= opt.window; ++i) {
        auto cs = degree_component_structure(P, i, opt.window);
        ++p.checked;
        literal_ok = literal_ok && cs.matches();
        bool ok = i <= 0 || opt.literal ? cs.matches() : cs.matches_radical();
        if (!ok) {
            auto &want = i <= 0 || opt.literal ? cs.predicted : cs.predicted_radical;
            p.fail({{"generator", to_json(G)}, {"degree", i}, {"columns", flatten(cs.columns)}, {"expected", flatten(want)}});
        }
    }
    if (!literal_ok) ++p.counters["literal_mismatch_instances"];
    return p;
}

std::vector<InitialChoice> choices_for(const ArcSet &G, const std::optional<InitialChoice> &c, bool every_vertex) {
    int nv = G.arcs.size();
    if (c) {
        if (c->vertex >= nv) throw std::invalid_argument("choice " + choice_str(*c) + " out of range");
        return {*c};
    }
    std::vector<InitialChoice> v;
    for (int j = 0; j < (every_vertex ? nv : 1); ++j) v.push_back({Side::Beta, j}), v.push_back({Side::Delta, j});
    return v;
}

Partial beta_delta_one(const ArcSet &G, const CheckOptions &opt) {
    Partial p;
    auto C = cone_data(G);
    auto mode = default_mode(G.n);
    for (auto ch : choices_for(G, opt.choice, true)) {
        auto M = signed_matrix(C, ch, mode);
        auto r = check_beta_delta(M, C, mode);
        p.checked += r.checked;
        for (auto &f : r.failures)
            p.fail({{"generator", to_json(C.G)}, {"choice", choice_str(ch)}, {"diagonal", M.diagonal()}, {"reason", f}});
    }
    return p;
}

Partial derived_one(const ArcSet &G, const CheckOptions &opt) {
    Partial p;
    auto C = cone_data(G);
    auto mode = default_mode(G.n);
    for (auto ch : choices_for(G, opt.choice, false)) {
        auto M = signed_matrix(C, ch, mode);
        Report reps[] = {check_beta_delta(M, C, mode), verify_phi_homomorphism(C, M, mode, opt.window)};
        for (auto &r : reps) {
            p.checked += r.checked;
            for (auto &f : r.failures)
                p.fail({{"generator", to_json(C.G)}, {"choice", choice_str(ch)}, {"diagonal", M.diagonal()}, {"reason", f}});
        }
    }
    return p;
}

Partial confluence_one(const ArcSet &G, const CheckOptions &opt) {
    Partial p;
    auto r = check_confluence(piano_from_generator(G), opt.length);
    p.checked = r.words;
    if (!r.pass())
        p.fail({{"generator", to_json(G)},
                {"diverging", r.diverging},
                {"oracle_mismatch", r.oracle_mismatch},
                {"witness", r.witness}});
    return p;
}

}  // namespace

CheckResult run_check(const std::string &which, int n, const std::vector<ArcSet> &gens, const CheckOptions &opt,
                      bool all_of_size) {
    std::vector<ArcSet> inst = gens;
    if (which == "confluence" && all_of_size) inst = enumerate_limit_generators(n, true);
    std::function<Partial(const ArcSet &)> one;
    if (which == "bijection")
        one = bijection_one;
    else if (which == "path-algebra-iso")
        one = [&](const ArcSet &G) { return iso_one(G, opt); };
    else if (which == "piano-as-paths")
        one = [&](const ArcSet &G) { return paths_one(G, opt); };
    else if (which == "beta-delta")
        one = [&](const ArcSet &G) { return beta_delta_one(G, opt); };
    else if (which == "derived-equiv")
        one = [&](const ArcSet &G) { return derived_one(G, opt); };
    else if (which == "confluence")
        one = [&](const ArcSet &G) { return confluence_one(G, opt); };
    else
        throw std::invalid_argument("unknown check " + which);

    auto parts = parallel_map(inst.size(), [&](size_t k) { return one(inst[k]); });
    CheckResult res;
    res.check = which;
    res.n = n;
    res.instances = inst.size();
    std::map<std::string, long> counters;
    for (auto &p : parts) {
        res.checked += p.checked;
        res.failures += p.failures;
        for (auto &w : p.witnesses)
            if ((int)res.witnesses.size() < opt.max_witnesses) res.witnesses.push_back(w);
        for (auto &[k, v] : p.counters) counters[k] += v;
    }
    for (auto &[k, v] : counters) res.extra[k] = v;

    if (which == "bijection" && all_of_size) {
        auto diss = enumerate_extended_admissible(n);
        std::set<DissectionSet> images, all(diss.begin(), diss.end());
        for (auto &G : inst) images.insert(epsilon(G));
        ++res.checked;
        if (diss.size() != inst.size() || images != all) {
            ++res.failures;
            res.witnesses.push_back({{"reason", "image differs from the extended dissections"},
                                     {"generators", inst.size()},
                                     {"dissections", diss.size()}});
        }
        for (auto &D : diss) {
            ++res.checked;
            if (!(epsilon(epsilon_inverse(D)) == D)) {
                ++res.failures;
                if ((int)res.witnesses.size() < opt.max_witnesses)
                    res.witnesses.push_back({{"dissection", to_json(D)}, {"reason", "epsilon(epsilon_inverse(D)) != D"}});
            }
        }
        res.extra["dissections"] = diss.size();
    }
    if (which == "derived-equiv" || which == "beta-delta")
        res.extra["choice"] = opt.choice ? choice_str(*opt.choice) : (which == "beta-delta" ? "every" : "beta:1,delta:1");
    if (which == "piano-as-paths") res.extra["reading"] = opt.literal ? "literal" : "radical";
    return res;
}

}  // namespace pianocat
