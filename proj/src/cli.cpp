#include "wirtlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wirtlab/alexander.hpp"
#include "wirtlab/alternating.hpp"
#include "wirtlab/coxeter.hpp"
#include "wirtlab/diagram.hpp"
#include "wirtlab/errors.hpp"
#include "wirtlab/json_io.hpp"
#include "wirtlab/presentation.hpp"
#include "wirtlab/surfaces.hpp"
#include "wirtlab/welded.hpp"
#include "wirtlab/wirtinger.hpp"

namespace wirtlab::cli {

namespace {

struct Outcome {
    Json report;
    int code = kOk;
};

Json with_schema(Json body) {
    Json j{{"schema", "1"}};
    j.update(body);
    return j;
}

Json error_json(const Error& e, const std::string& input) {
    Json err{{"kind", std::string(error_name(e.kind()))}, {"message", e.what()}};
    if (!input.empty()) err["input"] = input;
    return with_schema(Json{{"error", err}});
}

int exit_for(const Error& e) { return e.kind() == ErrorKind::ResourceLimit ? kResourceLimit : kFailure; }

// Splits on commas (or another separator) outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split_top(s)) {
        const std::string t = trim(tok);
        if (t.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Syntax, "expected an integer, got '" + t + "'");
        }
    }
    return out;
}

// Strand or generator key: a letter a..z names 0..25, digits give the id.
int parse_key(const std::string& k) {
    const std::string t = trim(k);
    if (t.size() == 1 && t[0] >= 'a' && t[0] <= 'z') return t[0] - 'a';
    auto v = parse_ints(t);
    if (v.size() != 1) throw Error(ErrorKind::Syntax, "bad label key '" + t + "'");
    return v[0];
}

std::vector<std::pair<int, std::string>> parse_assignments(const std::string& s) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& part : split_top(s)) {
        const std::string t = trim(part);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Syntax, "label '" + t + "' needs key=value");
        out.emplace_back(parse_key(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return out;
}

Json word_json(const CoxeterGraph& g, const CoxeterWord& w) { return format_coxeter_word(g, w); }

Json coloring_json(const PartialColoring& c) {
    Json trace = Json::array();
    for (const auto& m : c.trace) trace.push_back(Json{{"crossing", m.crossing}, {"strand", m.strand}});
    return Json{{"seeds", c.seeds}, {"trace", trace}};
}

Json factors_json(const std::vector<LaurentPoly>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(to_string(f));
    return a;
}

GroupPresentation maybe_twist(GroupPresentation p, const std::optional<int>& m, int axis) {
    if (m) p = twist_spin(p, *m, axis);
    return p;
}

Json interval_json(const Interval& iv) {
    return Json{{"lo", iv.lo}, {"hi", iv.hi ? Json(*iv.hi) : Json(nullptr)}, {"provenance", iv.provenance}};
}

Outcome omega_of_line(const std::string& line, const std::string& command) {
    const GaussCode code = parse_gauss_code(line);
    if (command == "parse") {
        return {Json{{"code", to_text(code)}, {"crossings", code.crossing_count()},
                     {"strands", layout_of(code).strand_count}}};
    }
    SearchOptions opt;
    opt.threads = 1;
    auto r = omega(code, opt);
    return {Json{{"omega", r.omega}, {"seeds", r.witness.seeds}}};
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* env = std::getenv("WIRTLAB_LIMITS")) {
        try {
            apply_limits_spec(env);
        } catch (const Error& e) {
            err << "wirtlab: " << error_name(e.kind()) << ": WIRTLAB_LIMITS: " << e.what() << "\n";
            out << error_json(e, "WIRTLAB_LIMITS").dump() << "\n";
            return kFailure;
        }
    }

    CLI::App app{"Wirtinger numbers, quotient labelings and bridge bounds for knot diagrams", "wirtlab"};
    app.require_subcommand(1);
    std::string format = "json", out_path;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write the report to this file");

    std::string input, graph_arg, labels_arg, images_arg, target = "coxeter", kind, choices_arg, twists_arg;
    std::string m_list, rk_list, p_list, command = "omega";
    std::vector<std::string> inputs, params;
    std::optional<int> twist_m;
    int k = 2, budget = 2, axis = 0, p = 2, copies = 1, tw = 1, genus = 1, q = 1, cap = -1;
    std::size_t deleted = 0, degree = 0;
    unsigned threads = 0;
    bool assert_hyp = false, certify = false;
    std::function<Outcome()> action;

    auto code_input = [&](CLI::App* s) { s->add_option("code", input, "Gauss code, code file or JSON")->required(); };

    auto* s_parse = app.add_subcommand("parse", "validate a code and report its structure");
    code_input(s_parse);
    s_parse->callback([&] {
        action = [&] {
            const GaussCode code = load_code(input);
            const auto tr = twist_regions(code);
            Json regions = Json::array();
            for (const auto& r : tr.regions) regions.push_back(r.crossings);
            const int g = supporting_genus(code);
            return Outcome{Json{{"code", to_text(code)},
                                {"visits", code_to_json(code)["visits"]},
                                {"crossings", code.crossing_count()},
                                {"strands", layout_of(code).strand_count},
                                {"overpasses", overpass_count(code)},
                                {"genus", g},
                                {"classical", g == 0},
                                {"twist_regions", regions},
                                {"tw", tr.tw}}};
        };
    });

    auto* s_build = app.add_subcommand("build", "torus P N | pretzel Q1 Q2 ... | twist-chain W1 W2 ...");
    s_build->add_option("kind", kind)->required()->check(CLI::IsMember({"torus", "pretzel", "twist-chain"}));
    s_build->add_option("params", params)->required();
    s_build->callback([&] {
        action = [&] {
            std::vector<int> v;
            for (const auto& s : params) {
                auto xs = parse_ints(s);
                v.insert(v.end(), xs.begin(), xs.end());
            }
            GaussCode code;
            if (kind == "torus") {
                if (v.size() != 2) throw Error(ErrorKind::BadParameter, "torus needs P and N");
                code = build_torus_2braid(v[0], v[1]);
            } else if (kind == "pretzel") {
                code = build_pretzel(v);
            } else {
                code = build_twist_chain(v);
            }
            return Outcome{Json{{"code", to_text(code)}, {"visits", code_to_json(code)["visits"]}}};
        };
    });

    auto* s_omega = app.add_subcommand("omega", "Wirtinger number with a witness");
    code_input(s_omega);
    s_omega->add_option("--threads", threads, "worker threads (0: hardware)");
    s_omega->callback([&] {
        action = [&] {
            const GaussCode code = load_code(input);
            SearchOptions opt;
            opt.threads = threads;
            const auto r = omega(code, opt);
            Json j{{"omega", r.omega}};
            j.update(coloring_json(r.witness));
            j["subsets_tested"] = r.subsets_tested;
            return Outcome{j};
        };
    });

    auto* s_col = app.add_subcommand("colorable", "whether k seeds color the diagram");
    code_input(s_col);
    s_col->add_option("--k", k)->required();
    s_col->callback([&] {
        action = [&] {
            const auto r = is_k_colorable(load_code(input), k);
            Json j{{"k", k}, {"colorable", r.has_value()}};
            if (r)
                j.update(coloring_json(*r));
            return Outcome{j};
        };
    });

    auto* s_weld = app.add_subcommand("welded-search", "least omega over codes reachable by welded moves");
    code_input(s_weld);
    s_weld->add_option("--budget", budget, "move budget");
    s_weld->add_option("--cap", cap, "crossing cap (default: input crossings + 1)");
    s_weld->callback([&] {
        action = [&] {
            const GaussCode code = load_code(input);
            const std::size_t c = cap < 0 ? code.crossing_count() + 1 : static_cast<std::size_t>(cap);
            const auto r = search_welded_min_omega(code, budget, c);
            Json moves = Json::array();
            for (const auto& m : r.moves) moves.push_back(describe(m));
            return Outcome{Json{{"omega", omega(code).omega},
                                {"min_omega", r.min_omega},
                                {"moves", moves},
                                {"best", to_text(r.best)},
                                {"visited", r.visited}}};
        };
    });

    auto* s_pres = app.add_subcommand("presentation", "Wirtinger presentation of a code");
    code_input(s_pres);
    s_pres->callback([&] {
        action = [&] { return Outcome{Json{{"presentation", presentation_to_json(load_presentation(input))}}}; };
    });

    auto* s_spin = app.add_subcommand("twist-spin", "add the twist-spin relators");
    code_input(s_spin);
    s_spin->add_option("--m", twist_m)->required();
    s_spin->add_option("--axis", axis, "axis generator");
    s_spin->callback([&] {
        action = [&] {
            return Outcome{Json{{"presentation", presentation_to_json(twist_spin(load_presentation(input), *twist_m, axis))}}};
        };
    });

    auto* s_conn = app.add_subcommand("connect", "zig-zag connected sum of presentations");
    s_conn->add_option("inputs", inputs)->required();
    s_conn->add_option("--twists", twists_arg, "twist-spin each summand: m1,m2,...");
    s_conn->add_option("--choices", choices_arg, "explicit identifications u:v,...");
    s_conn->add_flag("--certify", certify, "emit the two-generator certificate for the twists");
    s_conn->callback([&] {
        action = [&] {
            std::vector<GroupPresentation> parts;
            for (const auto& in : inputs) parts.push_back(load_presentation(in));
            std::vector<int> ms = parse_ints(twists_arg);
            if (!ms.empty()) {
                if (ms.size() != parts.size()) throw Error(ErrorKind::BadParameter, "one twist per summand");
                for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = twist_spin(parts[i], ms[i], zigzag_x(parts[i]));
            }
            std::vector<AmalgamChoice> ch;
            for (const auto& c : split_top(choices_arg)) {
                auto t = trim(c);
                if (t.empty()) continue;
                auto colon = t.find(':');
                if (colon == std::string::npos) throw Error(ErrorKind::Syntax, "choice '" + t + "' needs u:v");
                ch.emplace_back(parse_key(t.substr(0, colon)), parse_key(t.substr(colon + 1)));
            }
            Json j{{"presentation", presentation_to_json(connected_sum_presentation(parts, ch))}};
            if (certify) {
                const auto cert = two_generator_certificate(ms, static_cast<int>(ms.size()));
                auto mer = [&](const Meridian& m) {
                    return Json{{"summand", m.summand}, {"which", std::string(1, m.which)},
                                {"generator", meridian_generator(parts, m)}};
                };
                Json steps = Json::array();
                for (const auto& s : cert.steps) {
                    Json w = Json::array();
                    for (const auto& [m, e] : s.word) w.push_back(Json{{"meridian", mer(m)}, {"exponent", e}});
                    steps.push_back(Json{{"k", s.k}, {"M", s.M}, {"a", s.a}, {"b", s.b}, {"derived", mer(s.derived)}, {"word", w}});
                }
                j["certificate"] = Json{{"a", cert.a}, {"b", cert.b}, {"M", cert.M}, {"generators", Json::array({mer(cert.first), mer(cert.second)})}, {"steps", steps}};
            }
            return Outcome{j};
        };
    });

    auto* s_verify = app.add_subcommand("verify", "check that generator images satisfy every relator");
    code_input(s_verify);
    s_verify->add_option("--target", target)->check(CLI::IsMember({"coxeter", "perm"}));
    s_verify->add_option("--graph", graph_arg, "Coxeter graph JSON or file");
    s_verify->add_option("--degree", degree, "permutation degree");
    s_verify->add_option("--images", images_arg, "generator=image,...")->required();
    s_verify->add_option("--m", twist_m, "twist-spin first");
    s_verify->add_option("--axis", axis);
    s_verify->callback([&] {
        action = [&] {
            const GroupPresentation pres = maybe_twist(load_presentation(input), twist_m, axis);
            const auto assigns = parse_assignments(images_arg);
            int top = 0;
            for (int g : pres.generators) top = std::max(top, g + 1);
            std::optional<std::size_t> fail;
            if (target == "coxeter") {
                if (graph_arg.empty()) throw Error(ErrorKind::BadParameter, "--graph is required for a Coxeter target");
                const CoxeterGraph g = load_graph(graph_arg);
                CoxeterEngine eng(g);
                std::vector<CoxeterWord> imgs(static_cast<std::size_t>(top));
                for (const auto& [gen, w] : assigns) {
                    if (gen < 0 || gen >= top) throw Error(ErrorKind::UnknownGenerator, "no generator " + std::to_string(gen));
                    imgs[static_cast<std::size_t>(gen)] = parse_coxeter_word(g, w);
                }
                fail = first_failing_relator(pres, imgs, eng);
            } else {
                std::size_t d = degree;
                for (const auto& [gen, w] : assigns) d = std::max(d, parse_permutation(w).degree());
                PermEngine eng(d);
                std::vector<Permutation> imgs(static_cast<std::size_t>(top), Permutation(d));
                for (const auto& [gen, w] : assigns) {
                    if (gen < 0 || gen >= top) throw Error(ErrorKind::UnknownGenerator, "no generator " + std::to_string(gen));
                    imgs[static_cast<std::size_t>(gen)] = parse_permutation(w, d);
                }
                fail = first_failing_relator(pres, imgs, eng);
            }
            Json j{{"homomorphism", !fail.has_value()}};
            j["first_failing_relator"] = fail ? Json(*fail) : Json(nullptr);
            return Outcome{j, fail ? kFailure : kOk};
        };
    });

    auto* s_vc = app.add_subcommand("verify-coxeter", "reflection labeling of a diagram");
    code_input(s_vc);
    s_vc->add_option("--graph", graph_arg)->required();
    s_vc->add_option("--labels", labels_arg, "strand=word,...")->required();
    s_vc->callback([&] {
        action = [&] {
            const GaussCode code = load_code(input);
            const CoxeterGraph g = load_graph(graph_arg);
            std::map<int, CoxeterWord> seeds;
            for (const auto& [s, w] : parse_assignments(labels_arg)) seeds[s] = parse_coxeter_word(g, w);
            const auto rep = verify_coxeter_labeling(code, g, seeds);
            Json labels = Json::array();
            for (const auto& l : rep.labels) labels.push_back(word_json(g, l));
            Json j{{"status", status_name(rep.status)}, {"consistent", rep.consistent}, {"surjective", rep.surjective},
                   {"rank_bound", rep.rank_bound}, {"labels", labels}};
            if (rep.clash_crossing) j["clash"] = Json{{"crossing", *rep.clash_crossing}, {"strand", *rep.clash_strand}};
            if (!rep.message.empty()) j["message"] = rep.message;
            return Outcome{j, rep.status == LabelingStatus::Ok ? kOk : kFailure};
        };
    });

    auto* s_va = app.add_subcommand("verify-alternating", "p-cycle labeling of a diagram");
    code_input(s_va);
    s_va->add_option("--labels", labels_arg, "strand=(1 2 3),...")->required();
    s_va->add_option("--p", p, "cycle length")->required();
    s_va->add_option("--m", degree, "degree (default: inferred)");
    s_va->callback([&] {
        action = [&] {
            const GaussCode code = load_code(input);
            CycleLabeling L;
            L.p = p;
            std::size_t d = degree;
            const auto assigns = parse_assignments(labels_arg);
            for (const auto& [s, w] : assigns) d = std::max(d, parse_permutation(w).degree());
            L.degree = d;
            for (const auto& [s, w] : assigns) L.seeds[s] = parse_permutation(w, d);
            const auto rep = verify_perm_labeling(code, L);
            Json labels = Json::array();
            for (const auto& l : rep.labels) labels.push_back(to_cycle_string(l));
            Json j{{"status", rep.consistent ? "ok" : "Inconsistent"}, {"consistent", rep.consistent}, {"degree", d},
                   {"labels", labels}};
            if (rep.clash_crossing) j["clash"] = Json{{"crossing", *rep.clash_crossing}, {"strand", *rep.clash_strand}};
            if (rep.consistent) {
                const auto gen = generates_alternating(rep.labels, d);
                j["generates_alternating"] = gen.generates;
                j["order"] = gen.order ? Json(*gen.order) : Json(nullptr);
                j["method"] = gen.method;
                if (gen.generates && p >= 3 && p % 2 == 1 && !(d == 3 && p == 3))
                    j["rank_bound"] = rank_lower_bound_pcycles(p, static_cast<int>(d));
            }
            return Outcome{j, rep.consistent ? kOk : kFailure};
        };
    });

    auto* s_nak = app.add_subcommand("nakanishi", "Alexander-module generator bound over F_p[t]");
    code_input(s_nak);
    s_nak->add_option("--p", p, "prime (default 2)");
    s_nak->add_option("--m", twist_m, "twist-spin first");
    s_nak->add_option("--axis", axis);
    s_nak->add_option("--copies", copies, "connected sum of this many copies");
    s_nak->add_option("--delete", deleted, "deleted meridian column");
    s_nak->callback([&] {
        action = [&] {
            if (copies < 1) throw Error(ErrorKind::BadParameter, "--copies must be at least 1");
            const GroupPresentation one = maybe_twist(load_presentation(input), twist_m, axis);
            const GroupPresentation pres =
                copies == 1 ? one : connected_sum_presentation(std::vector<GroupPresentation>(static_cast<std::size_t>(copies), one));
            const auto nb = nakanishi_lower_bound(pres, p, deleted);
            return Outcome{Json{{"p", p}, {"bound", nb.bound}, {"mu_bound", nb.mu_bound}, {"factors", factors_json(nb.factors)}}};
        };
    });

    auto* s_tri = app.add_subcommand("trisect", "bridge trisection arithmetic: B:C1,C2,C3:CHI ...");
    s_tri->add_option("params", params)->required();
    s_tri->callback([&] {
        action = [&] {
            std::vector<TrisectionParams> list;
            Json items = Json::array();
            for (const auto& s : params) {
                auto parts = split_top(s, ':');
                if (parts.size() != 3) throw Error(ErrorKind::Syntax, "trisection '" + s + "' needs B:C1,C2,C3:CHI");
                auto b = parse_ints(parts[0]), c = parse_ints(parts[1]), chi = parse_ints(parts[2]);
                if (b.size() != 1 || c.size() != 3 || chi.size() != 1)
                    throw Error(ErrorKind::Syntax, "trisection '" + s + "' needs B:C1,C2,C3:CHI");
                list.push_back(validate_trisection(b[0], c[0], c[1], c[2], chi[0]));
                items.push_back(Json{{"b", b[0]}, {"c", c}, {"euler", chi[0]}});
            }
            const int beta = bridge_from_trisection(list);
            return Outcome{Json{{"trisections", items}, {"beta", beta},
                                {"b_lower", trisection_lower_bound(beta, list.front().euler)}}};
        };
    });

    auto* s_bounds = app.add_subcommand("bounds", "tube CODE | commutator --m --rk | kanenobu --p --q");
    s_bounds->add_option("kind", kind)->required()->check(CLI::IsMember({"tube", "commutator", "kanenobu"}));
    s_bounds->add_option("code", input);
    s_bounds->add_option("--graph", graph_arg);
    s_bounds->add_option("--labels", labels_arg);
    s_bounds->add_option("--m", m_list);
    s_bounds->add_option("--rk", rk_list);
    s_bounds->add_option("--p", p_list);
    s_bounds->add_option("--q", q);
    s_bounds->callback([&] {
        action = [&] {
            if (kind == "commutator") {
                const auto cb = commutator_bound(parse_ints(m_list), parse_ints(rk_list));
                return Outcome{Json{{"M", cb.M}, {"N", cb.N},
                                    {"bound", std::to_string(cb.num) + "/" + std::to_string(cb.den)},
                                    {"ceiling", cb.ceiling}}};
            }
            if (kind == "kanenobu") {
                const auto r = kanenobu_interval(parse_ints(p_list), q);
                Json summands = Json::array();
                for (const auto& s : r.summands) {
                    Json terms = Json::array();
                    for (const auto& t : s) terms.push_back(Json{{"count", t.count}, {"torus", t.torus}});
                    summands.push_back(terms);
                }
                return Outcome{Json{{"feasible", true}, {"r", r.r}, {"s", r.s}, {"j", r.j}, {"summands", summands}}};
            }
            if (input.empty()) throw Error(ErrorKind::BadParameter, "bounds tube needs a code");
            const GaussCode code = load_code(input);
            std::optional<int> rank;
            if (!graph_arg.empty()) {
                const CoxeterGraph g = load_graph(graph_arg);
                std::map<int, CoxeterWord> seeds;
                for (const auto& [s, w] : parse_assignments(labels_arg)) seeds[s] = parse_coxeter_word(g, w);
                const auto rep = verify_coxeter_labeling(code, g, seeds);
                if (rep.status != LabelingStatus::Ok)
                    throw Error(ErrorKind::Validation, "labeling rejected: " + rep.message);
                rank = static_cast<int>(rep.rank_bound);
            }
            const auto L = tube_bounds(code, rank);
            return Outcome{Json{{"omega", L.omega}, {"euler", L.euler}, {"mu", interval_json(L.mu)},
                                {"beta", interval_json(L.beta)}, {"bridge", interval_json(L.bridge)},
                                {"equality_certified", L.equality_certified}}};
        };
    });

    auto* s_vol = app.add_subcommand("volume", "volume lower bound and bridge upper bound");
    s_vol->add_option("--tw", tw)->required();
    s_vol->add_option("--genus", genus)->required();
    s_vol->add_flag("--assert-hypotheses", assert_hyp, "caller asserts representativity and diagram hypotheses");
    s_vol->callback([&] {
        action = [&] {
            const auto v = volume_bounds(tw, genus, assert_hyp);
            return Outcome{Json{{"vol_lower", v.vol_lower}, {"beta_g_upper", v.beta_g_upper}, {"c", v.c},
                                {"chain_holds", v.chain_holds}, {"v_oct", kVOct}, {"v_tet", kVTet},
                                {"hypotheses", "asserted by caller"}}};
        };
    });

    auto* s_batch = app.add_subcommand("batch", "one code per manifest line");
    s_batch->add_option("manifest", input)->required();
    s_batch->add_option("--command", command)->check(CLI::IsMember({"omega", "parse"}));
    s_batch->add_option("--threads", threads);
    s_batch->callback([&] {
        action = [&] {
            std::ifstream in(input);
            if (!in) throw Error(ErrorKind::Io, "cannot read manifest " + input);
            std::vector<std::pair<std::size_t, std::string>> lines;
            std::string line;
            // A blank line is the empty code; trailing blank lines are not items.
            for (std::size_t n = 1; std::getline(in, line); ++n) {
                const std::string t = trim(line);
                if (t.empty() || t[0] != '#') lines.emplace_back(n, t);
            }
            while (!lines.empty() && lines.back().second.empty()) lines.pop_back();
            std::vector<Json> results(lines.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
                    Json r{{"line", lines[i].first}, {"input", lines[i].second}};
                    try {
                        r.update(omega_of_line(lines[i].second, command).report);
                    } catch (const Error& e) {
                        r["error"] = Json{{"kind", std::string(error_name(e.kind()))}, {"message", e.what()}};
                    }
                    results[i] = r;
                }
            };
            unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
            n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, lines.size())));
            std::vector<std::thread> pool;
            for (unsigned t = 0; t + 1 < n; ++t) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();
            std::size_t errors = 0;
            std::map<int, std::size_t> hist;
            for (const auto& r : results) {
                if (r.contains("error"))
                    ++errors;
                else if (r.contains("omega"))
                    ++hist[r["omega"].get<int>()];
            }
            Json table = Json::object();
            for (const auto& [w, c] : hist) table[std::to_string(w)] = c;
            Json summary{{"count", results.size()}, {"ok", results.size() - errors}, {"errors", errors}};
            if (command == "omega") summary["omega_counts"] = table;
            return Outcome{Json{{"results", results}, {"summary", summary}}};
        };
    });

    std::vector<std::string> argv_store{"wirtlab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "wirtlab: " << e.what() << "\n";
        out << with_schema(Json{{"error", Json{{"kind", "UsageError"}, {"message", e.what()}}}}).dump() << "\n";
        return kFailure;
    }

    Outcome result;
    try {
        result = action();
        result.report = with_schema(result.report);
    } catch (const Error& e) {
        err << "wirtlab: " << error_name(e.kind()) << ": " << e.what() << "\n";
        result = {error_json(e, input), exit_for(e)};
    } catch (const std::exception& e) {
        err << "wirtlab: internal error: " << e.what() << "\n";
        result = {with_schema(Json{{"error", Json{{"kind", "InternalError"}, {"message", e.what()}}}}), kFailure};
    }

    std::ostringstream text;
    if (format == "text")
        flatten(result.report, "", text);
    else
        text << result.report.dump() << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            err << "wirtlab: IOError: cannot write " << out_path << "\n";
            return kFailure;
        }
        f << text.str();
    } else {
        out << text.str();
    }
    return result.code;
}

}  // namespace wirtlab::cli
