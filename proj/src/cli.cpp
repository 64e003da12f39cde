#include "ghs/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ghs/arith.hpp"
#include "ghs/cycles.hpp"
#include "ghs/fixed_locus.hpp"
#include "ghs/kirchhoff.hpp"
#include "ghs/multigraph.hpp"
#include "ghs/planar.hpp"
#include "ghs/torus.hpp"

namespace ghs::cli {

namespace {

using nlohmann::json;

struct Flags {
    std::string file;
    std::string basis = "tree";
    std::string convention = "constant";
    std::string primes;
    int bound = -1;
    int limit = -1;
    bool verbose = false;
};

Multigraph read_graph(const Flags& flags, std::istream& in) {
    std::string text;
    if (!flags.file.empty()) {
        std::ifstream f(flags.file);
        if (!f) throw std::invalid_argument("cannot open " + flags.file);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_graph(text);
}

CycleBasis choose_basis(const Multigraph& g, const Flags& flags) {
    if (flags.basis == "faces") {
        auto p = is_planar(g, flags.bound > 0 ? flags.bound : 16);
        if (!p.planar)
            throw std::domain_error("faces basis requires a planar graph");
        CycleBasis b;
        b.n = g.edge_count();
        b.provenance = CycleBasis::Provenance::FaceBoundaries;
        for (const auto& c : p.witness) b.vectors.push_back(c.vec);
        return b;
    }
    if (flags.basis != "tree")
        throw std::invalid_argument("basis must be tree or faces");
    auto trees = spanning_trees(g);
    if (trees.empty()) throw std::domain_error("not connected");
    return cycle_basis(g, trees.front());
}

json poly_json(const MultiPoly& p) {
    json j;
    j["string"] = p.to_string();
    j["terms"] = json::parse(p.to_json());
    return j;
}

json basis_json(const CycleBasis& b) {
    json rows = json::array();
    for (const auto& v : b.vectors) rows.push_back(v);
    const char* tag =
        b.provenance == CycleBasis::Provenance::FundamentalFromTree ? "tree"
        : b.provenance == CycleBasis::Provenance::FaceBoundaries    ? "faces"
                                                                    : "user";
    return json{{"vectors", rows}, {"provenance", tag}};
}

json zvec_json(const ZVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json zmat_json(const ZMat& m) {
    json a = json::array();
    for (const auto& r : m) a.push_back(zvec_json(r));
    return a;
}

json decomposition_json(const PolygonalDecomposition& d, int n) {
    auto edge_list = [n](EdgeSet s) {
        json a = json::array();
        for (int e = 1; e <= n; ++e)
            if (edge_in(s, e)) a.push_back(e);
        return a;
    };
    json polys = json::array(), ifaces = json::array();
    for (const auto& p : d.polygons) polys.push_back(edge_list(p.support));
    for (EdgeSet i : d.interfaces) ifaces.push_back(edge_list(i));
    return json{{"polygons", polys},
                {"interfaces", ifaces},
                {"glued_edges", edge_list(d.glued_edges)}};
}

json star_json(const StarReport& r, int n) {
    json j;
    j["is_polygonal"] = r.is_polygonal;
    j["is_planar"] = r.is_planar;
    j["is_star"] = r.is_star;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.witness_decomposition)
        j["witness_decomposition"] = decomposition_json(*r.witness_decomposition, n);
    if (r.failing_decomposition)
        j["failing_decomposition"] = decomposition_json(*r.failing_decomposition, n);
    if (r.witness_basis) j["witness_basis"] = basis_json(*r.witness_basis);
    return j;
}

json normalized_json(const NormalizedMatrix& nm) {
    json j;
    j["h"] = nm.h;
    j["n"] = nm.n;
    j["ell"] = nm.ell;
    json fresh = json::array();
    for (size_t k = 0; k < nm.fresh_positions.size(); ++k) {
        fresh.push_back(json{{"y", k + 1},
                             {"position", {nm.fresh_positions[k].first,
                                           nm.fresh_positions[k].second}},
                             {"form", nm.fresh_forms[k].to_string()}});
    }
    j["fresh"] = fresh;
    json dependent = json::array();
    for (const auto& [pos, e] : nm.upper) {
        if (e.kind != NormalizedMatrix::Kind::Dependent) continue;
        LinearForm f(nm.n);
        for (int k = 0; k < nm.ell; ++k) f.c[k] = e.coeffs[k];
        dependent.push_back(json{{"position", {pos.first, pos.second}},
                                 {"scale", e.scale.get_str()},
                                 {"form", f.to_string()}});
    }
    j["dependent"] = dependent;
    return j;
}

int finish(std::ostream& out, const std::string& subcommand,
           const Multigraph* g, const json& payload,
           std::chrono::steady_clock::time_point start, int code = 0) {
    json report;
    report["version"] = kVersion;
    report["subcommand"] = subcommand;
    if (g) report["input_digest"] = graph_digest(*g);
    report["payload"] = payload;
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    out << report.dump(2) << "\n";
    return code;
}

// ---- subcommand bodies ------------------------------------------------

int cmd_gen(const std::vector<std::string>& args, std::ostream& out,
            bool as_json) {
    if (args.empty()) throw std::invalid_argument("gen needs a family name");
    Multigraph g;
    const std::string& family = args[0];
    auto arg_at = [&](size_t i) {
        if (args.size() <= i) throw std::invalid_argument("missing argument");
        return std::stoi(args[i]);
    };
    if (family == "wheel") g = wheel(arg_at(1));
    else if (family == "banana") g = banana(arg_at(1));
    else if (family == "cycle") g = cycle_graph(arg_at(1));
    else if (family == "complete") g = complete(arg_at(1));
    else if (family == "bipartite") g = complete_bipartite(arg_at(1), arg_at(2));
    else if (family == "diamond") g = diamond();
    else if (family == "figure8") g = figure_eight();
    else if (family == "subdivided-wheel") g = subdivided_wheel();
    else throw std::invalid_argument("unknown family: " + family);
    out << (as_json ? to_json(g) + "\n" : to_text(g));
    return 0;
}

json count_record_json(const CountRecord& r) {
    return json{{"digest", r.graph_digest},
                {"q", r.q},
                {"affine", r.affine_count.get_str()},
                {"projective", r.projective_count.get_str()}};
}

std::vector<unsigned> parse_primes(const std::string& csv) {
    std::vector<unsigned> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (out.empty()) throw std::invalid_argument("no primes given (--q)");
    return out;
}

int cmd_corpus(std::ostream& out, std::ostream& err, bool verbose,
               std::chrono::steady_clock::time_point start);

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
    CLI::App app{"exact graph polynomials and their torus symmetries"};
    app.require_subcommand(1);
    Flags flags;
    app.add_option("--file", flags.file, "read the graph from a file");
    app.add_option("--basis", flags.basis, "cycle basis: tree|faces");
    app.add_option("--convention", flags.convention,
                   "weight lattice convention: constant|zero");
    app.add_option("--q", flags.primes, "comma-separated primes");
    app.add_option("--bound", flags.bound, "search bound override");
    app.add_option("--limit", flags.limit, "decomposition cap");
    app.add_flag("--verbose", flags.verbose, "summaries on standard error");
    bool gen_json = false;

    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    gen->add_flag("--json", gen_json, "emit the JSON graph form");
    gen->allow_extras();
    for (const char* name :
         {"poly", "matrix", "verify", "lattice", "rank", "clusters", "star",
          "planar", "fixed", "count", "fit", "corpus"})
        app.add_subcommand(name);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        if (sub == "gen") return cmd_gen(gen->remaining(), out, gen_json);
        if (sub == "corpus") return cmd_corpus(out, err, flags.verbose, start);
        if (sub == "fit") {
            std::ostringstream ss;
            ss << in.rdbuf();
            json j = json::parse(ss.str());
            if (j.contains("payload")) j = j["payload"];
            std::vector<CountRecord> records;
            for (const auto& r : j.at("records")) {
                CountRecord rec;
                rec.graph_digest = r.at("digest").get<std::string>();
                rec.q = r.at("q").get<unsigned>();
                rec.affine_count = Int(r.at("affine").get<std::string>());
                rec.projective_count = Int(r.at("projective").get<std::string>());
                records.push_back(std::move(rec));
            }
            for (const auto& r : records)
                if (r.graph_digest != records.front().graph_digest)
                    throw std::invalid_argument("records from different graphs");
            auto fit = polynomial_fit(records);
            json payload;
            if (fit) {
                json coeffs = json::array();
                for (const auto& c : *fit) coeffs.push_back(c.get_str());
                payload["coefficients"] = coeffs;
                payload["degree"] = fit->empty() ? 0 : int(fit->size()) - 1;
            } else {
                payload["coefficients"] = nullptr;
            }
            return finish(out, sub, nullptr, payload, start);
        }

        Multigraph g = read_graph(flags, in);
        auto [h0, h1] = betti(g);

        if (sub == "poly") {
            MultiPoly p = kirchhoff(g);
            json payload;
            payload["connected"] = h0 == 1;
            payload["terms"] = p.term_count();
            auto deg = p.homogeneous_degree();
            payload["homogeneous"] = deg.has_value();
            if (deg) payload["degree"] = *deg;
            payload["polynomial"] = p.to_string();
            if (flags.verbose)
                err << p.term_count() << " terms, degree " << (deg ? *deg : -1)
                    << (deg ? ", homogeneous" : ", inhomogeneous") << "\n";
            return finish(out, sub, &g, payload, start);
        }
        if (sub == "matrix") {
            CycleBasis b = choose_basis(g, flags);
            SymbolicMatrix m = build_cycle_matrix(g, b);
            json entries = json::array();
            for (int i = 1; i <= m.dim(); ++i) {
                json row = json::array();
                for (int j = 1; j <= m.dim(); ++j)
                    row.push_back(m.at(i, j).to_string());
                entries.push_back(row);
            }
            json payload;
            payload["basis"] = basis_json(b);
            payload["entries"] = entries;
            payload["normalization"] = normalized_json(normalize(m));
            return finish(out, sub, &g, payload, start);
        }
        if (sub == "verify") {
            json cases = json::array();
            bool all_ok = true;
            for (EdgeSet t : spanning_trees(g)) {
                CycleBasis b = cycle_basis(g, t);
                VerifyReport r = verify_det_equals_kirchhoff(g, b);
                all_ok = all_ok && r.ok;
                json c;
                c["tree"] = json::array();
                for (int e = 1; e <= g.edge_count(); ++e)
                    if (edge_in(t, e)) c["tree"].push_back(e);
                c["ok"] = r.ok;
                if (!r.ok) {
                    c["det"] = r.det.to_string();
                    c["tree_sum"] = r.tree_sum.to_string();
                }
                cases.push_back(c);
            }
            json payload;
            payload["all_ok"] = all_ok;
            payload["cases"] = cases;
            return finish(out, sub, &g, payload, start, all_ok ? 0 : 1);
        }
        if (sub == "lattice") {
            WeightConvention conv = flags.convention == "zero"
                                        ? WeightConvention::Zero
                                        : WeightConvention::Constant;
            if (flags.convention != "zero" && flags.convention != "constant")
                throw std::invalid_argument("convention must be constant|zero");
            WeightLattice lat = weight_lattice(kirchhoff(g), conv);
            json payload;
            payload["convention"] = flags.convention;
            payload["rank"] = lat.rank();
            payload["basis"] = zmat_json(lat.basis);
            return finish(out, sub, &g, payload, start);
        }
        if (sub == "rank" || sub == "clusters") {
            CycleBasis b = choose_basis(g, flags);
            NormalizedMatrix nm = normalize(build_cycle_matrix(g, b));
            if (sub == "clusters") {
                ClusterPartition cp = clusters(nm);
                json cl = json::array();
                for (const auto& c : cp.clusters) {
                    json one = json::array();
                    for (auto [i, j] : c) one.push_back({i, j});
                    cl.push_back(one);
                }
                json exc = json::array();
                for (auto [i, j] : cp.excessive) exc.push_back({i, j});
                json payload;
                payload["clusters"] = cl;
                payload["excessive"] = exc;
                payload["excess"] = cp.excess;
                return finish(out, sub, &g, payload, start);
            }
            ExactRankResult ex = exact_diagonal_rank(nm);
            ExpandedDet det = expanded_determinant(nm);
            json payload;
            payload["bound"] = rank_lower_bound(nm);
            payload["exact_lambda_h"] = ex.rank;
            payload["full_lattice_rank"] = projective_rank(det.det);
            payload["lattice"] = zmat_json(ex.lattice);
            return finish(out, sub, &g, payload, start);
        }
        if (sub == "star") {
            DecompositionOptions dopt;
            if (flags.bound > 0) dopt.max_edges = flags.bound;
            if (flags.limit > 0) dopt.max_results = flags.limit;
            StarReport def = is_star_graph_definitional(g, dopt);
            MatrixStarOptions mopt;
            if (flags.bound > 0) mopt.max_edges = flags.bound;
            StarReport mat = is_star_graph_matrix(g, mopt);
            json payload;
            payload["definitional"] = star_json(def, g.edge_count());
            payload["matrix"] = star_json(mat, g.edge_count());
            payload["routes_agree"] = def.is_star == mat.is_star;
            return finish(out, sub, &g, payload, start);
        }
        if (sub == "planar") {
            auto p = is_planar(g, flags.bound > 0 ? flags.bound : 16);
            json payload;
            payload["planar"] = p.planar;
            json witness = json::array();
            for (const auto& c : p.witness) {
                json edges = json::array();
                for (int e = 1; e <= g.edge_count(); ++e)
                    if (edge_in(c.support, e)) edges.push_back(e);
                witness.push_back(edges);
            }
            payload["witness"] = witness;
            return finish(out, sub, &g, payload, start);
        }
        if (sub == "fixed") {
            CycleBasis b = choose_basis(g, flags);
            FixedLocusReport r = fixed_points_in_hypersurface(g, b);
            json comps = json::array();
            for (size_t i = 0; i < r.components.size(); ++i) {
                comps.push_back(
                    json{{"coordinates", r.components[i].coordinates},
                         {"character", zvec_json(r.components[i].character)},
                         {"is_point", bool(r.is_point[i])},
                         {"contained", bool(r.contained[i])}});
            }
            json payload;
            payload["torus_rank"] = r.torus_rank;
            payload["components"] = comps;
            payload["all_points_contained"] = r.all_points_contained;
            return finish(out, sub, &g, payload, start);
        }
        if (sub == "count") {
            json records = json::array();
            for (unsigned q : parse_primes(flags.primes)) {
                CountOptions copt;
                if (flags.bound > 0) copt.work_bound = double(flags.bound);
                records.push_back(count_record_json(count_points(g, q, copt)));
            }
            json payload;
            payload["records"] = records;
            return finish(out, sub, &g, payload, start);
        }
        err << "error: unknown subcommand " << sub << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int cmd_corpus(std::ostream& out, std::ostream& err, bool verbose,
               std::chrono::steady_clock::time_point start) {
    struct Named {
        std::string name;
        Multigraph g;
    };
    std::vector<Named> graphs = {
        {"triangle", cycle_graph(3)},   {"square", cycle_graph(4)},
        {"wheel3", wheel(3)},           {"wheel4", wheel(4)},
        {"wheel5", wheel(5)},           {"banana2", banana(2)},
        {"banana3", banana(3)},         {"banana4", banana(4)},
        {"banana5", banana(5)},         {"diamond", diamond()},
        {"figure-eight", figure_eight()},
        {"k5", complete(5)},            {"k33", complete_bipartite(3, 3)},
        {"subdivided-wheel", subdivided_wheel()},
    };
    json table = json::array();
    bool all_ok = true;
    for (const auto& [name, g] : graphs) {
        auto suite = [&, name = name](const std::string& check, int status) {
            // status: 1 pass, 0 fail, -1 skipped
            table.push_back(json{{"graph", name},
                                 {"check", check},
                                 {"status", status == 1   ? "pass"
                                            : status == 0 ? "FAIL"
                                                          : "skip"}});
            if (status == 0) all_ok = false;
            if (verbose)
                err << name << " " << check << " "
                    << (status == 1 ? "pass" : status == 0 ? "FAIL" : "skip")
                    << "\n";
        };
        auto trees = spanning_trees(g);
        suite("tree-count",
              Int(static_cast<unsigned long>(trees.size())) ==
                      count_spanning_trees(g)
                  ? 1
                  : 0);
        MultiPoly p = kirchhoff(g);
        suite("two-route", p == kirchhoff_dc(g) ? 1 : 0);
        {
            bool ok = true;
            for (int e = 1; e <= g.edge_count(); ++e) {
                auto sub = subdivide_edge(g, e);
                std::vector<Int> form(sub.graph.edge_count(), 0);
                form[sub.e1 - 1] = 1;
                form[sub.e2 - 1] = 1;
                if (p.substitute(e, form) != kirchhoff(sub.graph)) ok = false;
            }
            suite("subdivision", ok ? 1 : 0);
        }
        if (g.edge_count() <= 12) {
            bool ok = true;
            for (EdgeSet t : trees) {
                auto r = verify_det_equals_kirchhoff(g, cycle_basis(g, t));
                ok = ok && r.ok;
            }
            suite("det-vs-trees", ok ? 1 : 0);
        } else {
            suite("det-vs-trees", -1);
        }
        auto [h0, h1] = betti(g);
        if (h1 >= 1 && h1 <= 4) {
            NormalizedMatrix nm =
                normalize(build_cycle_matrix(g, cycle_basis(g, trees.front())));
            int bound = rank_lower_bound(nm);
            int exact = exact_diagonal_rank(nm).rank;
            int full = projective_rank(expanded_determinant(nm).det);
            suite("rank-chain", bound <= exact && exact <= full ? 1 : 0);
        } else {
            suite("rank-chain", -1);
        }
        if (is_two_connected(g) && g.edge_count() <= 10 && g.vertices <= 6) {
            try {
                StarReport def = is_star_graph_definitional(g);
                StarReport mat = is_star_graph_matrix(g);
                suite("star-routes", def.is_star == mat.is_star ? 1 : 0);
                suite("polygonal-planar",
                      def.is_polygonal == def.is_planar ? 1 : 0);
            } catch (const std::domain_error&) {
                suite("star-routes", -1);
                suite("polygonal-planar", -1);
            }
        } else {
            suite("star-routes", -1);
            suite("polygonal-planar", -1);
        }
    }
    json payload;
    payload["all_ok"] = all_ok;
    payload["table"] = table;
    return finish(out, "corpus", nullptr, payload, start, all_ok ? 0 : 1);
}

}  // namespace

}  // namespace ghs::cli
