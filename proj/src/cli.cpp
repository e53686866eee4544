#include "arrlat/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "arrlat/generators.hpp"

namespace arrlat {

using ordered_json = nlohmann::ordered_json;

ParsedFile parse_arr_text(const std::string& text) {
    ParsedFile pf;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

        std::istringstream tokens(line);
        std::vector<std::string> toks;
        std::string tok;
        while (tokens >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": expected three integers, got " +
                                         std::to_string(toks.size()) + " tokens");

        Triple t;
        for (int i = 0; i < 3; ++i) {
            const std::string& s = toks[static_cast<size_t>(i)];
            size_t digits = s[0] == '-' ? s.size() - 1 : s.size();
            bool ok = digits > 0;
            for (size_t j = s[0] == '-' ? 1 : 0; j < s.size(); ++j)
                if (!isdigit(static_cast<unsigned char>(s[j]))) ok = false;
            if (!ok)
                throw ParseError(lineno, "line " + std::to_string(lineno) + ": invalid integer '" + s + "'");
            t[i] = Int(s);
        }
        if (t[0] == 0 && t[1] == 0 && t[2] == 0)
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": zero vector is not a projective line");
        pf.raw.push_back(std::move(t));
        pf.source_lines.push_back(lineno);
    }
    if (pf.raw.empty()) throw ParseError(0, "no lines in input");
    return pf;
}

Arrangement arrangement_from_text(const std::string& text) {
    ParsedFile pf = parse_arr_text(text);
    try {
        return build_arrangement(pf.raw);
    } catch (const DuplicateLine& d) {
        int a = pf.source_lines[static_cast<size_t>(d.first)];
        int b = pf.source_lines[static_cast<size_t>(d.second)];
        throw DuplicateLine(a, b,
                            "input lines " + std::to_string(a) + " and " + std::to_string(b) +
                                " define the same projective line");
    }
}

Arrangement parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return arrangement_from_text(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line, path + ": " + e.what());
    } catch (const DuplicateLine& d) {
        throw DuplicateLine(d.first, d.second, path + ": " + d.what());
    }
}

namespace {

std::string vertex_name(const GraphVertex& v) {
    return (v.kind == CurveKind::StrictTransform ? "L" : "E") + std::to_string(v.index);
}

std::string render_lattice(const Arrangement& arr, const IntersectionLattice& lat) {
    std::ostringstream os;
    os << "lines: " << lat.n_lines << "\n";
    for (int i = 0; i < lat.n_lines; ++i)
        os << "  " << i << ": (" << triple_str(arr.lines[static_cast<size_t>(i)].coeffs, ' ')
           << ")  weight " << lat.line_weights[static_cast<size_t>(i)] << "\n";
    os << "points: " << lat.points.size() << "\n";
    for (size_t pi = 0; pi < lat.points.size(); ++pi) {
        os << "  " << pi << ": [" << triple_str(arr.points[pi].point.coords, ':') << "]  mult "
           << lat.points[pi].multiplicity() << "  lines";
        for (int i : lat.points[pi].lines) os << " " << i;
        os << "\n";
    }
    return os.str();
}

std::string render_poincare(const PoincareData& pd) {
    std::ostringstream os;
    os << "central:";
    for (long long c : pd.central) os << " " << c;
    os << "\nprojective:";
    for (long long c : pd.projective) os << " " << c;
    os << "\n";
    return os.str();
}

std::string render_graph(const WeightedIncidenceGraph& g) {
    std::ostringstream os;
    os << "vertices: " << g.vertices.size() << "\n";
    for (const auto& v : g.vertices) os << "  " << vertex_name(v) << "  weight " << v.weight << "\n";
    os << "edges: " << g.edges.size() << "\n";
    for (const auto& e : g.edges)
        os << "  " << vertex_name(g.vertices[static_cast<size_t>(e.u)]) << " -- "
           << vertex_name(g.vertices[static_cast<size_t>(e.v)]) << "  [p" << e.point << "]\n";
    return os.str();
}

std::string render_verdict(const ComparisonVerdict& v) {
    std::ostringstream os;
    os << "verdict: " << (v.isomorphic ? "Isomorphic" : "Distinct") << "\n";
    if (v.isomorphic) {
        os << "bijection:";
        for (size_t i = 0; i < v.bijection.size(); ++i) os << " " << i << "->" << v.bijection[i];
        os << "\n";
    } else {
        os << "reason: " << v.reason->detail << "\n";
    }
    os << "trace:\n";
    for (const auto& t : v.trace) {
        if (t.stage == "certificate")
            os << "  certificate: " << t.left;
        else
            os << "  " << t.stage << ": " << t.left << " vs " << t.right;
        os << (t.equal ? "  ok" : "  MISMATCH") << "\n";
    }
    return os.str();
}

ordered_json json_trace(const ComparisonVerdict& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : v.trace)
        arr.push_back({{"stage", t.stage}, {"left", t.left}, {"right", t.right}, {"equal", t.equal}});
    return arr;
}

ordered_json json_lattice(const Arrangement& arr, const IntersectionLattice& lat) {
    ordered_json lines = ordered_json::array();
    for (int i = 0; i < lat.n_lines; ++i) {
        const Triple& c = arr.lines[static_cast<size_t>(i)].coeffs;
        lines.push_back({{"index", i},
                         {"coeffs", {c[0].get_str(), c[1].get_str(), c[2].get_str()}},
                         {"weight", lat.line_weights[static_cast<size_t>(i)]}});
    }
    ordered_json points = ordered_json::array();
    for (size_t pi = 0; pi < lat.points.size(); ++pi) {
        const Triple& c = arr.points[pi].point.coords;
        points.push_back({{"coords", {c[0].get_str(), c[1].get_str(), c[2].get_str()}},
                          {"multiplicity", lat.points[pi].multiplicity()},
                          {"lines", lat.points[pi].lines}});
    }
    return {{"n_lines", lat.n_lines}, {"lines", lines}, {"points", points}};
}

ordered_json json_class(const ArrangementClass& cls) {
    ordered_json j;
    switch (cls.tag) {
        case ClassTag::TooSmall: j["tag"] = "TooSmall"; break;
        case ClassTag::Pencil: j["tag"] = "Pencil"; break;
        case ClassTag::NearPencil: j["tag"] = "NearPencil"; break;
        case ClassTag::TwoMultiplePoints: j["tag"] = "TwoMultiplePoints"; break;
        case ClassTag::OtherExceptional: j["tag"] = "OtherExceptional"; break;
        case ClassTag::Nonexceptional: j["tag"] = "Nonexceptional"; break;
    }
    if (cls.tag == ClassTag::TwoMultiplePoints) {
        j["p"] = cls.p;
        j["q"] = cls.q;
    }
    j["witness"] = cls.witness;
    return j;
}

ordered_json json_graph(const WeightedIncidenceGraph& g) {
    ordered_json vertices = ordered_json::array();
    for (const auto& v : g.vertices)
        vertices.push_back({{"id", vertex_name(v)},
                            {"kind", v.kind == CurveKind::StrictTransform ? "strict_transform" : "exceptional"},
                            {"weight", v.weight}});
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"u", vertex_name(g.vertices[static_cast<size_t>(e.u)])},
                         {"v", vertex_name(g.vertices[static_cast<size_t>(e.v)])},
                         {"point", e.point}});
    return {{"vertices", vertices}, {"edges", edges}};
}

ordered_json json_verdict(const ComparisonVerdict& v) {
    ordered_json j;
    j["outcome"] = v.isomorphic ? "Isomorphic" : "Distinct";
    if (v.isomorphic)
        j["bijection"] = v.bijection;
    else
        j["reason"] = {{"kind", reason_kind_str(v.reason->kind)}, {"detail", v.reason->detail}};
    j["trace"] = json_trace(v);
    return j;
}

const char* kUsage =
    "usage: arrlat [--json] [--seed N] <command> [arguments]\n"
    "\n"
    "commands:\n"
    "  lattice FILE          print the intersection lattice\n"
    "  poincare FILE         print central and projective Poincare coefficients\n"
    "  betti FILE -k K       print the k-th Betti number of the cone complement\n"
    "  classify FILE         print the arrangement class\n"
    "  blowup FILE [--dot]   print the blow-up incidence graph (DOT with --dot)\n"
    "  compare FILE1 FILE2   decide lattice isomorphism; exit 0 iso, 1 distinct\n"
    "  roundtrip FILE        blow-down round trip plus seeded self-witness check\n"
    "  gen KIND PARAMS       emit an arrangement file; KIND is pencil N,\n"
    "                        nearpencil N, generic N, or cased P Q\n";

struct Options {
    bool json = false;
    bool dot = false;
    std::uint64_t seed = 0;
    std::optional<int> betti_k;
    std::vector<std::string> positional;
};

int parse_long(const std::string& s, long long& out) {
    try {
        size_t used = 0;
        out = std::stoll(s, &used);
        return used == s.size() ? 0 : 1;
    } catch (...) {
        return 1;
    }
}

void emit_report(std::ostream& out, const std::string& section, ordered_json body) {
    ordered_json report;
    report["schema_version"] = "1";
    report[section] = std::move(body);
    out << report.dump(2) << "\n";
}

}  // namespace

std::string emit_dot(const WeightedIncidenceGraph& g) {
    std::ostringstream os;
    os << "graph blowup {\n";
    os << "  node [shape=circle];\n";
    for (const auto& v : g.vertices)
        os << "  " << vertex_name(v) << " [label=\"" << vertex_name(v) << " (" << v.weight << ")\"];\n";
    for (const auto& e : g.edges)
        os << "  " << vertex_name(g.vertices[static_cast<size_t>(e.u)]) << " -- "
           << vertex_name(g.vertices[static_cast<size_t>(e.v)]) << " [label=\"p" << e.point << "\"];\n";
    os << "}\n";
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") {
            opt.json = true;
        } else if (a == "--dot") {
            opt.dot = true;
        } else if (a == "--seed" || a == "-k") {
            if (i + 1 == args.size()) {
                err << "error: " << a << " needs a value\n" << kUsage;
                return 2;
            }
            long long value = 0;
            if (parse_long(args[++i], value) != 0 || (a == "--seed" && value < 0)) {
                err << "error: invalid value for " << a << ": '" << args[i] << "'\n" << kUsage;
                return 2;
            }
            if (a == "--seed")
                opt.seed = static_cast<std::uint64_t>(value);
            else
                opt.betti_k = static_cast<int>(value);
        } else if (!a.empty() && a[0] == '-' && !(a.size() > 1 && (isdigit(static_cast<unsigned char>(a[1]))))) {
            err << "error: unknown flag '" << a << "'\n" << kUsage;
            return 2;
        } else {
            opt.positional.push_back(a);
        }
    }

    if (opt.positional.empty()) {
        err << kUsage;
        return 2;
    }
    const std::string cmd = opt.positional[0];
    if (opt.dot && cmd != "blowup") {
        err << "error: --dot only applies to blowup\n" << kUsage;
        return 2;
    }
    if (opt.betti_k && cmd != "betti") {
        err << "error: -k only applies to betti\n" << kUsage;
        return 2;
    }
    auto arity = [&](size_t want) {
        if (opt.positional.size() == want + 1) return true;
        err << "error: " << cmd << " takes " << want << " argument" << (want == 1 ? "" : "s") << "\n"
            << kUsage;
        return false;
    };

    try {
        if (cmd == "lattice" || cmd == "poincare" || cmd == "betti" || cmd == "classify" ||
            cmd == "blowup" || cmd == "roundtrip") {
            if (!arity(1)) return 2;
            Arrangement arr = parse_file(opt.positional[1]);
            IntersectionLattice lat = build_lattice(arr);

            if (cmd == "lattice") {
                if (opt.json)
                    emit_report(out, "lattice", json_lattice(arr, lat));
                else
                    out << render_lattice(arr, lat);
            } else if (cmd == "poincare") {
                PoincareData pd = poincare(lat);
                if (opt.json)
                    emit_report(out, "poincare",
                                {{"central", pd.central}, {"projective", pd.projective}});
                else
                    out << render_poincare(pd);
            } else if (cmd == "betti") {
                if (!opt.betti_k) {
                    err << "error: betti needs -k K\n" << kUsage;
                    return 2;
                }
                long long value = betti(lat, *opt.betti_k);
                if (opt.json)
                    emit_report(out, "betti", {{"k", *opt.betti_k}, {"value", value}});
                else
                    out << value << "\n";
            } else if (cmd == "classify") {
                ArrangementClass cls = classify(lat);
                if (opt.json)
                    emit_report(out, "class", json_class(cls));
                else
                    out << class_str(cls) << "\n";
            } else if (cmd == "blowup") {
                if (opt.dot && opt.json) {
                    err << "error: --dot and --json cannot be combined\n";
                    return 2;
                }
                WeightedIncidenceGraph g = blow_up(lat);
                if (opt.dot)
                    out << emit_dot(g);
                else if (opt.json)
                    emit_report(out, "graph", json_graph(g));
                else
                    out << render_graph(g);
            } else {  // roundtrip
                WeightedIncidenceGraph g = blow_up(lat);
                IntersectionLattice rec = blow_down(g);
                auto bij = lattice_isomorphic(lat, rec);
                bool weights_ok = bij.has_value();
                if (bij)
                    for (int i = 0; i < lat.n_lines; ++i)
                        if (lat.line_weights[static_cast<size_t>(i)] !=
                            rec.line_weights[static_cast<size_t>((*bij)[static_cast<size_t>(i)])])
                            weights_ok = false;
                bool equivalence = blowup_equivalence_check(lat, rec);
                ComparisonVerdict witness = self_witness(arr, opt.seed);
                bool all = bij.has_value() && weights_ok && equivalence && witness.isomorphic;

                if (opt.json) {
                    emit_report(out, "roundtrip",
                                {{"seed", opt.seed},
                                 {"blowdown_isomorphic", bij.has_value()},
                                 {"weights_preserved", weights_ok},
                                 {"equivalence_check", equivalence},
                                 {"self_witness_isomorphic", witness.isomorphic}});
                } else {
                    out << "blowdown roundtrip: "
                        << (bij ? (weights_ok ? "isomorphic, weights preserved" : "isomorphic, WEIGHTS DIFFER")
                                : "NOT ISOMORPHIC")
                        << "\n";
                    out << "blowup equivalence: " << (equivalence ? "ok" : "FAILED") << "\n";
                    out << "self witness (seed " << opt.seed
                        << "): " << (witness.isomorphic ? "Isomorphic" : "Distinct") << "\n";
                }
                return all ? 0 : 1;
            }
            return 0;
        }

        if (cmd == "compare") {
            if (!arity(2)) return 2;
            Arrangement a = parse_file(opt.positional[1]);
            Arrangement b = parse_file(opt.positional[2]);
            ComparisonVerdict v = compare(a, b);
            if (opt.json)
                emit_report(out, "verdict", json_verdict(v));
            else
                out << render_verdict(v);
            return v.isomorphic ? 0 : 1;
        }

        if (cmd == "gen") {
            if (opt.positional.size() < 2) {
                err << "error: gen needs a kind\n" << kUsage;
                return 2;
            }
            const std::string kind = opt.positional[1];
            auto int_param = [&](size_t idx, long long& value) {
                if (idx >= opt.positional.size() || parse_long(opt.positional[idx], value) != 0) {
                    err << "error: gen " << kind << ": missing or invalid parameter\n";
                    return false;
                }
                return true;
            };

            std::vector<Triple> lines;
            std::string header;
            if (kind == "pencil" || kind == "nearpencil" || kind == "generic") {
                long long n = 0;
                if (opt.positional.size() != 3 || !int_param(2, n)) return 2;
                if (kind == "pencil" && n >= 1) lines = gen_pencil(static_cast<int>(n));
                else if (kind == "nearpencil" && n >= 4) lines = gen_near_pencil(static_cast<int>(n));
                else if (kind == "generic" && n >= 1) lines = gen_generic(static_cast<int>(n));
                else {
                    err << "error: gen " << kind << ": parameter " << n << " out of range\n";
                    return 2;
                }
                header = "# " + kind + " n=" + std::to_string(n);
            } else if (kind == "cased") {
                long long p = 0, q = 0;
                if (opt.positional.size() != 4 || !int_param(2, p) || !int_param(3, q)) return 2;
                if (p < 2 || q < 2) {
                    err << "error: gen cased: parameters must be at least 2\n";
                    return 2;
                }
                lines = gen_two_multiple_points(static_cast<int>(p), static_cast<int>(q));
                header = "# cased p=" + std::to_string(p) + " q=" + std::to_string(q);
            } else {
                err << "error: unknown gen kind '" << kind << "'\n" << kUsage;
                return 2;
            }

            out << header << "\n";
            for (const Triple& t : lines) out << triple_str(t, ' ') << "\n";
            return 0;
        }

        err << "error: unknown command '" << cmd << "'\n" << kUsage;
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DuplicateLine& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroVector& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

}  // namespace arrlat
