#include "rotsys/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotsys/augment.hpp"
#include "rotsys/drawing.hpp"
#include "rotsys/generators.hpp"
#include "rotsys/io.hpp"
#include "rotsys/optimize.hpp"
#include "rotsys/plane.hpp"
#include "rotsys/svg.hpp"

namespace rotsys {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path);
}

// empty path means stdout
void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

void ensure_edge_ids(const Drawing& d, const EdgeList& F) {
    for (const Edge& e : F)
        if (e.u < 1 || e.v > d.n())
            throw std::invalid_argument(
                "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                " is out of range for n=" + std::to_string(d.n()));
}

void ensure_realizable(const Drawing& d) {
    auto issues = d.validate();
    if (!issues.empty())
        throw std::invalid_argument(
            "drawing is not realizable (run 'check --what valid'): " +
            issues.front());
}

EdgeList all_pairs(int n) {
    EdgeList out;
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v) out.emplace_back(u, v);
    return out;
}

double fitted_exponent(const std::vector<double>& ns,
                       const std::vector<double>& ts) {
    // least-squares slope of log t against log n
    const int k = static_cast<int>(ns.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < k; ++i) {
        const double x = std::log(ns[i]), y = std::log(std::max(ts[i], 1e-9));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{
        "plane subgraph toolkit for simple drawings of complete graphs "
        "given as clockwise rotation systems"};
    app.require_subcommand(1);
    int rc = 0;

    struct {
        int n = 6;
        std::uint64_t seed = 1;
        int vertex = 1, center = 1, limit_n = 12;
        std::string rot, edges, segments, pts, highlight, what;
        std::string out, out_pts, out_designated;
        std::string sizes = "16,32,64,128";
        bool fast = false, greedy = false, fast_connected = false;
        bool star_tree = false, dp = false, exact = false, print_k = false;
    } o;

    // ── gen ──
    auto* gen = app.add_subcommand("gen", "Generate drawings");
    gen->require_subcommand(1);

    auto* gen_cv = gen->add_subcommand("convex", "Points on a circle");
    gen_cv->add_option("--n", o.n, "vertex count (>= 3)")->required();
    gen_cv->add_option("--out", o.out, "rotation file (default stdout)");
    gen_cv->add_option("--out-pts", o.out_pts, "also write coordinates");
    gen_cv->callback([&] {
        Drawing d = gen_convex(o.n);
        std::string pts;
        if (!o.out_pts.empty()) {
            std::vector<Point> ps;
            for (VertexId v = 1; v <= d.n(); ++v) ps.push_back(d.point(v));
            pts = serialize_points(ps);
        }
        emit(o.out, serialize_rotations(d));
        if (!o.out_pts.empty()) write_file(o.out_pts, pts);
    });

    auto* gen_rd = gen->add_subcommand("random", "Uniform random points");
    gen_rd->add_option("--n", o.n, "vertex count (>= 3)")->required();
    gen_rd->add_option("--seed", o.seed, "random seed (default 1)");
    gen_rd->add_option("--out", o.out, "rotation file (default stdout)");
    gen_rd->add_option("--out-pts", o.out_pts, "also write coordinates");
    gen_rd->callback([&] {
        Drawing d = gen_random(o.n, o.seed);
        std::string pts;
        if (!o.out_pts.empty()) {
            std::vector<Point> ps;
            for (VertexId v = 1; v <= d.n(); ++v) ps.push_back(d.point(v));
            pts = serialize_points(ps);
        }
        emit(o.out, serialize_rotations(d));
        if (!o.out_pts.empty()) write_file(o.out_pts, pts);
    });

    auto* gen_tg = gen->add_subcommand(
        "tight", "Drawing with an inextendible subgraph of ceil(3n/2) edges");
    gen_tg->add_option("--n", o.n, "vertex count (>= 8)")->required();
    gen_tg->add_option("--out", o.out, "rotation file (default stdout)");
    gen_tg->add_option("--out-designated", o.out_designated,
                       "write the inextendible subgraph's edges");
    gen_tg->callback([&] {
        Drawing d = gen_tight(o.n);
        std::string des;
        if (!o.out_designated.empty())
            des = serialize_edges(tight_designated(o.n));
        emit(o.out, serialize_rotations(d));
        if (!o.out_designated.empty()) write_file(o.out_designated, des);
    });

    auto* gen_sg = gen->add_subcommand(
        "seg", "Drawing encoding a segment instance (see 'reduce')");
    gen_sg->add_option("--segments", o.segments, "segment file")->required();
    gen_sg->add_option("--out", o.out, "rotation file (default stdout)");
    gen_sg->callback([&] {
        Drawing d = gen_seg_reduction(parse_segments(read_file(o.segments)));
        emit(o.out, serialize_rotations(d));
    });

    // ── check ──
    auto* check = app.add_subcommand("check", "Verify properties");
    check->add_option("--rot", o.rot, "rotation file")->required();
    check->add_option("--edges", o.edges, "subgraph edge file");
    check->add_option("--what", o.what, "valid | plane | maximal | structure")
        ->required()
        ->check(CLI::IsMember({"valid", "plane", "maximal", "structure"}));
    check->callback([&] {
        if (o.what == "valid") {
            std::vector<std::string> issues;
            try {
                issues = parse_rotations(read_file(o.rot)).validate();
            } catch (const std::invalid_argument& e) {
                issues = {e.what()};
            }
            if (issues.empty()) {
                std::cout << "valid\n";
            } else {
                for (const auto& s : issues) std::cout << s << '\n';
                rc = 1;
            }
            return;
        }
        if (o.edges.empty())
            throw std::runtime_error("check: --edges is required for --what " +
                                     o.what);
        Drawing d = parse_rotations(read_file(o.rot));
        EdgeList F = parse_edges(read_file(o.edges));
        ensure_edge_ids(d, F);
        if (o.what == "structure") {
            ConnectivityReport r = connectivity(d.n(), F);
            std::cout << "edges " << r.edge_count << '\n'
                      << "min_degree " << r.min_degree << '\n'
                      << "spanning " << (r.spanning ? "yes" : "no") << '\n'
                      << "connected " << (r.connected ? "yes" : "no") << '\n'
                      << "two_connected " << (r.two_connected ? "yes" : "no")
                      << '\n'
                      << "essentially_3_edge_connected "
                      << (r.essentially_3ec ? "yes" : "no") << '\n';
            return;
        }
        ensure_realizable(d);
        if (!is_plane(d, F)) {
            for (std::size_t i = 0; i < F.size(); ++i)
                for (std::size_t j = i + 1; j < F.size(); ++j)
                    if (crosses(d, F[i], F[j])) {
                        std::cout << "not plane: " << F[i].u << " " << F[i].v
                                  << " crosses " << F[j].u << " " << F[j].v
                                  << '\n';
                        rc = 1;
                        return;
                    }
            return;  // unreachable
        }
        if (o.what == "plane") {
            std::cout << "plane\n";
            return;
        }
        if (is_maximal(d, F)) {
            std::cout << "maximal\n";
        } else {
            for (const Edge& e : all_pairs(d.n())) {
                if (std::find(F.begin(), F.end(), e) != F.end()) continue;
                bool blocked = false;
                for (const Edge& f : F)
                    if (crosses(d, e, f)) {
                        blocked = true;
                        break;
                    }
                if (!blocked) {
                    std::cout << "not maximal: " << e.u << " " << e.v
                              << " fits\n";
                    break;
                }
            }
            rc = 1;
        }
    });

    // ── augment ──
    auto* aug = app.add_subcommand(
        "augment", "Grow a crossing-free subgraph until nothing fits");
    aug->add_option("--rot", o.rot, "rotation file")->required();
    aug->add_option("--edges", o.edges, "starting subgraph");
    aug->add_flag("--greedy", o.greedy,
                  "one sweep over all rays, any starting subgraph");
    aug->add_flag("--fast-connected", o.fast_connected,
                  "face-walk augmentation, connected starting subgraph");
    aug->add_flag("--star-tree", o.star_tree,
                  "star of --center plus a spanning tree of the rest");
    aug->add_option("--center", o.center,
                    "center vertex for --star-tree (default 1)");
    aug->add_option("--out", o.out, "edge file (default stdout)");
    aug->callback([&] {
        if (o.greedy + o.fast_connected + o.star_tree != 1)
            throw std::runtime_error(
                "augment: pick exactly one of --greedy, --fast-connected, "
                "--star-tree");
        Drawing d = parse_rotations(read_file(o.rot));
        EdgeList F;
        if (!o.edges.empty()) {
            F = parse_edges(read_file(o.edges));
            ensure_edge_ids(d, F);
        }
        EdgeList out;
        if (o.greedy)
            out = greedy_maximal(d, F);
        else if (o.fast_connected)
            out = maximal_connected_fast(d, F);
        else
            out = star_plus_tree(d, o.center);
        emit(o.out, serialize_edges(out));
    });

    // ── maximize ──
    auto* mx = app.add_subcommand(
        "maximize", "Largest crossing-free subgraph, optionally constrained");
    mx->add_option("--rot", o.rot, "rotation file")->required();
    mx->add_option("--edges", o.edges,
                   "edges the result must contain (--dp: the subgraph to "
                   "complete, connected and spanning)");
    mx->add_flag("--dp", o.dp,
                 "polynomial completion of a connected spanning subgraph");
    mx->add_flag("--exact", o.exact, "exponential search, small n only");
    mx->add_option("--limit-n", o.limit_n,
                   "refuse --exact beyond this n (default 12)");
    mx->callback([&] {
        if (o.dp + o.exact != 1)
            throw std::runtime_error(
                "maximize: pick exactly one of --dp, --exact");
        Drawing d = parse_rotations(read_file(o.rot));
        EdgeList F;
        if (!o.edges.empty()) {
            F = parse_edges(read_file(o.edges));
            ensure_edge_ids(d, F);
        }
        EdgeList out;
        if (o.dp) {
            if (F.empty())
                throw std::runtime_error("maximize: --dp needs --edges");
            out = maximize_connected(d, F);
        } else {
            out = exact_max(d, F, o.limit_n);
        }
        emit(o.out, serialize_edges(out));
    });
    mx->add_option("--out", o.out, "edge file (default stdout)");

    // ── rays ──
    auto* rays = app.add_subcommand(
        "rays", "Edges from a vertex to a subgraph that cross none of it");
    rays->add_option("--rot", o.rot, "rotation file")->required();
    rays->add_option("--edges", o.edges, "subgraph edge file")->required();
    rays->add_option("--vertex", o.vertex, "source vertex")->required();
    rays->add_flag("--fast", o.fast,
                   "face-walk algorithm (subgraph must be connected)");
    rays->add_option("--out", o.out, "edge file (default stdout)");
    rays->callback([&] {
        Drawing d = parse_rotations(read_file(o.rot));
        EdgeList F = parse_edges(read_file(o.edges));
        ensure_edge_ids(d, F);
        if (o.vertex < 1 || o.vertex > d.n())
            throw std::invalid_argument("rays: vertex out of range");
        EdgeList out = o.fast ? uncrossed_rays_fast(d, F, o.vertex)
                              : uncrossed_rays_brute(d, F, o.vertex);
        emit(o.out, serialize_edges(out));
    });

    // ── reduce ──
    auto* red = app.add_subcommand(
        "reduce",
        "Encode a segment instance as a drawing whose largest crossing-free "
        "subgraph counts its non-crossing segments");
    red->add_option("--segments", o.segments, "segment file")->required();
    red->add_option("--out", o.out, "rotation file (default stdout)");
    red->add_flag("--k", o.print_k,
                  "also report the instance's optimum on stderr");
    red->callback([&] {
        auto segs = parse_segments(read_file(o.segments));
        Drawing d = gen_seg_reduction(segs);
        std::string note;
        if (o.print_k) {
            const int s = static_cast<int>(segs.size());
            const int k = max_noncrossing_segments(segs);
            note = "s=" + std::to_string(s) + " k_max=" + std::to_string(k) +
                   " plane_max<=" + std::to_string(11 * s - 6 + k) +
                   " (equality for normalized instances)\n";
        }
        emit(o.out, serialize_rotations(d));
        if (o.print_k) std::cerr << note;
    });

    // ── render ──
    auto* ren = app.add_subcommand(
        "render", "Straight-line SVG of a coordinate-backed drawing");
    ren->add_option("--pts", o.pts, "point file")->required();
    ren->add_option("--edges", o.edges, "base edges (default: all pairs)");
    ren->add_option("--highlight", o.highlight, "edges drawn bold");
    ren->add_option("--out", o.out, "svg file (default stdout)");
    ren->callback([&] {
        auto ps = parse_points(read_file(o.pts));
        EdgeList base = o.edges.empty()
                            ? all_pairs(static_cast<int>(ps.size()))
                            : parse_edges(read_file(o.edges));
        EdgeList hi;
        if (!o.highlight.empty()) hi = parse_edges(read_file(o.highlight));
        emit(o.out, render_svg(ps, base, hi));
    });

    // ── bench ──
    auto* bn = app.add_subcommand(
        "bench", "Time the face-walk ray search against the plain scan");
    bn->add_option("--sizes", o.sizes, "comma-separated n values");
    bn->add_option("--seed", o.seed, "random seed (default 1)");
    bn->callback([&] {
        std::vector<int> sizes;
        std::istringstream in(o.sizes);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) sizes.push_back(std::stoi(tok));
        if (sizes.empty())
            throw std::runtime_error("bench: no sizes given");
        std::vector<double> ns, tf, tb;
        std::size_t rays_total = 0;
        std::cout << "n\tmaximal\tbound\tfast_ms\tbrute_ms\n";
        for (int n : sizes) {
            Drawing d = gen_random(n, o.seed ^ static_cast<unsigned>(n));
            EdgeList F = greedy_maximal(d);
            const int bound = std::min((3 * n + 1) / 2, 2 * n - 3);
            using clock = std::chrono::steady_clock;
            auto t0 = clock::now();
            FaceStructure fs(d, F);
            for (VertexId v = 1; v <= n; ++v)
                rays_total += uncrossed_rays_fast(fs, v).size();
            auto t1 = clock::now();
            for (VertexId v = 1; v <= n; ++v)
                rays_total += uncrossed_rays_brute(d, F, v).size();
            auto t2 = clock::now();
            const double ms_f =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
            const double ms_b =
                std::chrono::duration<double, std::milli>(t2 - t1).count();
            ns.push_back(n);
            tf.push_back(ms_f);
            tb.push_back(ms_b);
            std::cout << n << '\t' << F.size() << '\t' << bound << '\t'
                      << ms_f << '\t' << ms_b << '\n';
        }
        std::cout << "# rays counted both ways: " << rays_total << '\n';
        if (sizes.size() >= 2) {
            std::cout << "fitted exponent fast  " << fitted_exponent(ns, tf)
                      << '\n';
            std::cout << "fitted exponent brute " << fitted_exponent(ns, tb)
                      << '\n';
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}

}  // namespace rotsys
