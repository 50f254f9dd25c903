#include "canon/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "canon/fpp.hpp"
#include "canon/ice.hpp"
#include "canon/oracle.hpp"
#include "canon/orderings.hpp"
#include "canon/parallel.hpp"
#include "canon/schnyder.hpp"

namespace canon {

namespace {

enum class Kind { Orientations, Orderings, Woods, FppDrawings, SchnyderDrawings };
enum class Format { Ndjson, Count, Svg };

struct RunConfig {
    std::string command;
    std::string kind;
    std::string input;
    std::string mode = "plane-rooted";
    std::string format = "ndjson";
    std::uint64_t limit = 0;
    bool first = false;
    std::uint64_t seed = 1;
    std::vector<int> sizes{1000, 2000, 4000};
    int threads = 1;
    int n = 0;
    int flips = 0;
};

Kind kind_of(const std::string &s) {
    if (s == "orientations")
        return Kind::Orientations;
    if (s == "orderings")
        return Kind::Orderings;
    if (s == "woods")
        return Kind::Woods;
    if (s == "fpp-drawings" || s == "fpp")
        return Kind::FppDrawings;
    return Kind::SchnyderDrawings;
}

Format format_of(const std::string &s) {
    if (s == "count")
        return Format::Count;
    if (s == "svg")
        return Format::Svg;
    return Format::Ndjson;
}

std::vector<Rooting> rootings_for(const MaximalPlaneGraph &g, const std::string &mode) {
    auto rotations = [](const Rooting &r) {
        const Triple &f = r.face;
        return std::vector<Rooting>{{f, r.reflected}, {{f[1], f[2], f[0]}, r.reflected}, {{f[2], f[0], f[1]}, r.reflected}};
    };
    if (mode == "plane-rooted")
        return {{g.outer(), false}};
    if (mode == "plane")
        return rotations({g.outer(), false});
    std::vector<Rooting> out;
    for (const Rooting &r : enumerate_rootings(g))
        for (const Rooting &s : rotations(r))
            out.push_back(s);
    return out;
}

void put_triple(std::string &s, const Triple &t) {
    s += '[' + std::to_string(t[0]) + ',' + std::to_string(t[1]) + ',' + std::to_string(t[2]) + ']';
}

std::string record_head(const MaximalPlaneGraph &h, bool reflected, bool rooted_only) {
    std::string s = "{";
    if (!rooted_only) {
        s += "\"outer\":";
        put_triple(s, h.outer());
        s += ",\"reflected\":";
        s += reflected ? "true," : "false,";
    }
    return s;
}

std::string coords_json(const GridDrawing &p) {
    std::string s = "\"coords\":[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ',';
        s += '[' + std::to_string(p[i].x) + ',' + std::to_string(p[i].y) + ']';
    }
    return s + ']';
}

// Streams the records of one rooted graph to sink; stops when sink returns false.
// With text == false the sink receives an empty string.
void enumerate_rooted(const MaximalPlaneGraph &h, bool reflected, bool rooted_only, Kind kind, Format fmt,
                      const std::function<bool(const std::string &)> &sink) {
    const bool text = fmt != Format::Count;
    const std::string head = text ? record_head(h, reflected, rooted_only) : std::string{};
    std::string rec;
    auto drawing = [&](const GridDrawing &p) {
        rec.clear();
        if (fmt == Format::Svg)
            rec = drawing_svg(h, p);
        else if (text)
            rec = head + coords_json(p) + '}';
        return sink(rec);
    };
    for_each_canonical_orientation(h, [&](const CanonicalOrientation &d) {
        switch (kind) {
        case Kind::Orientations:
            rec.clear();
            if (text) {
                rec = head + "\"edges\":[";
                for (EdgeId e = 0; e < h.num_edges(); ++e) {
                    if (e)
                        rec += ',';
                    rec += '[' + std::to_string(d.tail(h, e)) + ',' + std::to_string(d.head(h, e)) + ']';
                }
                rec += "]}";
            }
            return sink(rec);
        case Kind::Orderings: {
            bool go = true;
            topological_sortings(h, d, [&](std::span<const VertexId> seq) {
                rec.clear();
                if (text) {
                    rec = head + "\"order\":[";
                    for (std::size_t i = 0; i < seq.size(); ++i) {
                        if (i)
                            rec += ',';
                        rec += std::to_string(seq[i]);
                    }
                    rec += "]}";
                }
                go = sink(rec);
                return go;
            });
            return go;
        }
        case Kind::Woods: {
            const SchnyderWood wd = wood_from_orientation(h, d);
            rec.clear();
            if (text) {
                rec = head + "\"edges\":[";
                bool comma = false;
                for (EdgeId e = 0; e < h.num_edges(); ++e) {
                    const WoodEdge &we = wd.edges[e];
                    if (we.color == 0)
                        continue;
                    if (comma)
                        rec += ',';
                    comma = true;
                    const VertexId a = we.a_to_b ? h.edge(e).a : h.edge(e).b;
                    rec += '[' + std::to_string(a) + ',' + std::to_string(h.other(e, a)) + ',' +
                           std::to_string(we.color) + ']';
                }
                rec += "]}";
            }
            return sink(rec);
        }
        case Kind::FppDrawings:
            return drawing(canonical_drawing(h, d));
        case Kind::SchnyderDrawings:
            return drawing(schnyder_draw(h, wood_from_orientation(h, d)));
        }
        return true;
    });
}

MaximalPlaneGraph read_input(const RunConfig &cfg, std::istream &in) {
    std::string text;
    if (cfg.input.empty() || cfg.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream f(cfg.input);
        if (!f)
            throw GraphError("cannot open " + cfg.input);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return parse_graph(text);
}

int cmd_enumerate(const RunConfig &cfg, Kind kind, std::istream &in, std::ostream &out) {
    const Format fmt = format_of(cfg.format);
    if (fmt == Format::Svg && kind != Kind::FppDrawings && kind != Kind::SchnyderDrawings)
        throw GraphError("svg output needs a drawing kind");
    const MaximalPlaneGraph g = read_input(cfg, in);
    const std::vector<Rooting> rootings = rootings_for(g, cfg.mode);
    const bool rooted_only = cfg.mode == "plane-rooted";
    const std::uint64_t limit = cfg.first ? 1 : cfg.limit;
    std::uint64_t emitted = 0;
    auto room = [&] { return limit == 0 || emitted < limit; };
    auto write = [&](const std::string &rec) {
        if (fmt != Format::Count)
            out << rec << '\n';
        ++emitted;
        return room();
    };

    if (resolve_threads(cfg.threads) == 1 || rootings.size() == 1) {
        for (const Rooting &r : rootings) {
            if (!room())
                break;
            enumerate_rooted(reroot(g, r), r.reflected, rooted_only, kind, fmt, write);
        }
    } else {
        struct Shard {
            std::uint64_t count = 0;
            std::vector<std::string> records;
        };
        run_ordered(
            rootings.size(), cfg.threads,
            [&](std::size_t i) {
                Shard s;
                enumerate_rooted(reroot(g, rootings[i]), rootings[i].reflected, rooted_only, kind, fmt,
                                 [&](const std::string &rec) {
                                     if (fmt != Format::Count)
                                         s.records.push_back(rec);
                                     ++s.count;
                                     return limit == 0 || s.count < limit;
                                 });
                return s;
            },
            [&](std::size_t, Shard s) {
                if (fmt == Format::Count) {
                    emitted += limit == 0 ? s.count : std::min(s.count, limit - emitted);
                    return room();
                }
                for (const std::string &rec : s.records)
                    if (!write(rec))
                        return false;
                return room();
            });
    }
    if (fmt == Format::Count)
        out << emitted << '\n';
    return 0;
}

int cmd_oracle(const RunConfig &cfg, std::istream &in, std::ostream &out) {
    const MaximalPlaneGraph g = read_input(cfg, in);
    const bool count = format_of(cfg.format) == Format::Count;
    if (cfg.kind == "orientations") {
        const OrientationSet set = brute_force_orientations(g);
        if (count) {
            out << set.size() << '\n';
            return 0;
        }
        for (const CanonicalOrientation &d : set) {
            out << "{\"edges\":[";
            for (EdgeId e = 0; e < g.num_edges(); ++e)
                out << (e ? "," : "") << '[' << d.tail(g, e) << ',' << d.head(g, e) << ']';
            out << "]}\n";
        }
        return 0;
    }
    const OrderingSet set = brute_force_orderings(g);
    if (count) {
        out << set.size() << '\n';
        return 0;
    }
    for (const Ordering &o : set) {
        out << "{\"order\":[";
        for (std::size_t i = 0; i < o.size(); ++i)
            out << (i ? "," : "") << o[i];
        out << "]}\n";
    }
    return 0;
}

int cmd_bench_delay(const RunConfig &cfg, std::ostream &out) {
    out << "n\toutputs\tsetup_touches\tmax_touches\tmedian_touches\tmax_us\tmedian_us\n";
    for (int n : cfg.sizes) {
        if (n < 3)
            throw GraphError("sizes must be at least 3");
        const DelayReport r = measure_delay(random_flipped_triangulation(n, cfg.flips, cfg.seed), cfg.limit);
        out << r.n << '\t' << r.outputs << '\t' << r.setup_touches << '\t' << r.max_touches << '\t'
            << r.median_touches << '\t' << r.max_seconds * 1e6 << '\t' << r.median_seconds * 1e6 << '\n';
    }
    return 0;
}

template <class T>
T median(std::vector<T> v) {
    if (v.empty())
        return T{};
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
}

} // namespace

DelayReport measure_delay(const MaximalPlaneGraph &g, std::uint64_t limit) {
    using Clock = std::chrono::steady_clock;
    WellFormedGraph w(g);
    DelayReport r;
    r.n = g.num_vertices();
    r.setup_touches = w.setup_touches();
    std::vector<std::uint64_t> touches;
    std::vector<double> seconds;
    CanonicalOrientation d;
    d.outer = g.outer();
    IceEnumerator it(w);
    std::uint64_t last_touch = w.touches();
    auto last_time = Clock::now();
    while ((limit == 0 || r.outputs < limit) && it.next()) {
        snapshot_orientation(w, d);
        const auto now = Clock::now();
        touches.push_back(w.touches() - last_touch);
        seconds.push_back(std::chrono::duration<double>(now - last_time).count());
        last_touch = w.touches();
        last_time = now;
        ++r.outputs;
    }
    if (!touches.empty()) {
        r.max_touches = *std::max_element(touches.begin(), touches.end());
        r.max_seconds = *std::max_element(seconds.begin(), seconds.end());
    }
    r.median_touches = median(touches);
    r.median_seconds = median(seconds);
    return r;
}

std::string drawing_svg(const MaximalPlaneGraph &g, const GridDrawing &p) {
    constexpr std::int64_t s = 40;
    std::int64_t mx = 0, my = 0;
    for (const Point &q : p) {
        mx = std::max(mx, q.x);
        my = std::max(my, q.y);
    }
    auto X = [&](const Point &q) { return (q.x + 1) * s; };
    auto Y = [&](const Point &q) { return (my + 1 - q.y) * s; };
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (mx + 2) * s << "\" height=\"" << (my + 2) * s
      << "\">\n<metadata>{" << coords_json(p) << "}</metadata>\n";
    for (const Edge &e : g.edges())
        o << "<line x1=\"" << X(p[e.a]) << "\" y1=\"" << Y(p[e.a]) << "\" x2=\"" << X(p[e.b]) << "\" y2=\""
          << Y(p[e.b]) << "\" stroke=\"black\"/>\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        o << "<circle cx=\"" << X(p[v]) << "\" cy=\"" << Y(p[v]) << "\" r=\"10\" fill=\"white\" stroke=\"black\"/>"
          << "<text x=\"" << X(p[v]) << "\" y=\"" << Y(p[v]) + 4 << "\" text-anchor=\"middle\" font-size=\"10\">" << v
          << "</text>\n";
    o << "</svg>";
    return o.str();
}

int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Enumerate canonical orientations, orderings, Schnyder woods and grid drawings"};
    app.require_subcommand(1);
    const std::vector<std::string> modes{"plane-rooted", "plane", "planar"};

    auto *en = app.add_subcommand("enumerate", "Stream every solution of one kind");
    en->add_option("kind", cfg.kind)
        ->required()
        ->check(CLI::IsMember({"orientations", "orderings", "woods", "fpp-drawings", "schnyder-drawings"}));
    en->add_option("input", cfg.input, "graph document, stdin if omitted or -");
    en->add_option("--mode", cfg.mode)->check(CLI::IsMember(modes));
    en->add_option("--format", cfg.format)->check(CLI::IsMember({"ndjson", "count", "svg"}));
    en->add_option("--limit", cfg.limit)->check(CLI::PositiveNumber);
    en->add_option("--threads", cfg.threads, "worker threads for planar mode, 0 for all cores");

    auto *dr = app.add_subcommand("draw", "Draw per orientation (fpp) or per wood (schnyder)");
    dr->add_option("kind", cfg.kind)->required()->check(CLI::IsMember({"fpp", "schnyder"}));
    dr->add_option("input", cfg.input, "graph document, stdin if omitted or -");
    dr->add_option("--mode", cfg.mode)->check(CLI::IsMember(modes));
    dr->add_option("--format", cfg.format)->check(CLI::IsMember({"ndjson", "svg"}));
    dr->add_option("--limit", cfg.limit)->check(CLI::PositiveNumber);
    dr->add_flag("--first", cfg.first, "only the first drawing");
    dr->add_option("--threads", cfg.threads, "worker threads for planar mode, 0 for all cores");

    auto *or_ = app.add_subcommand("oracle", "Brute-force reference sets for small graphs");
    or_->add_option("kind", cfg.kind)->required()->check(CLI::IsMember({"orientations", "orderings"}));
    or_->add_option("input", cfg.input, "graph document, stdin if omitted or -");
    or_->add_option("--format", cfg.format)->check(CLI::IsMember({"ndjson", "count"}));

    auto *be = app.add_subcommand("bench-delay", "Per-output cost of the orientation enumerator");
    be->add_option("--sizes", cfg.sizes)->delimiter(',');
    be->add_option("--limit", cfg.limit)->check(CLI::PositiveNumber);
    be->add_option("--seed", cfg.seed);
    be->add_option("--flips", cfg.flips, "random edge flips applied to each graph")->check(CLI::NonNegativeNumber);

    auto *ge = app.add_subcommand("generate", "Random triangulation document");
    ge->add_option("n", cfg.n)->required()->check(CLI::Range(3, 1 << 24));
    ge->add_option("--seed", cfg.seed);
    ge->add_option("--flips", cfg.flips, "random edge flips after stacking")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (en->parsed())
            return cmd_enumerate(cfg, kind_of(cfg.kind), in, out);
        if (dr->parsed())
            return cmd_enumerate(cfg, cfg.kind == "fpp" ? Kind::FppDrawings : Kind::SchnyderDrawings, in, out);
        if (or_->parsed())
            return cmd_oracle(cfg, in, out);
        if (be->parsed()) {
            if (cfg.limit == 0)
                cfg.limit = 1000;
            return cmd_bench_delay(cfg, out);
        }
        out << to_document(random_flipped_triangulation(cfg.n, cfg.flips, cfg.seed)) << '\n';
        return 0;
    } catch (const GraphError &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const SizeGuardError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace canon
