#include "hallsod/cli.hpp"

#include "hallsod/pbw.hpp"
#include "hallsod/shuffle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace hallsod::cli {

namespace {

using Json = nlohmann::ordered_json;

class VerificationFailure : public Error {
public:
    using Error::Error;
};

Quiver load_quiver(const std::string& name_or_path) {
    for (const char* name : {"jordan", "doubled-jordan", "tripled-jordan"}) {
        if (name_or_path == name) return Quiver::builtin(name_or_path);
    }
    namespace fs = std::filesystem;
    std::vector<fs::path> candidates{fs::path(name_or_path)};
    if (const char* dir = std::getenv(kQuiverDirEnv)) {
        candidates.push_back(fs::path(dir) / (name_or_path + ".json"));
        candidates.push_back(fs::path(dir) / name_or_path);
    }
    for (const auto& path : candidates) {
        std::error_code ec;
        if (!fs::is_regular_file(path, ec)) continue;
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        return Quiver::from_json(buf.str(), path.stem().string());
    }
    throw InputError("unknown quiver '" + name_or_path + "'");
}

DimVector parse_dims(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto v = to_int64(parse_rational(item));
        if (v < 0) throw InputError("negative dimension in '" + text + "'");
        entries.push_back(static_cast<int>(v));
    }
    if (entries.empty()) throw InputError("empty dimension vector");
    DimVector d(std::move(entries));
    if (d.is_zero()) throw InputError("dimension vector must have positive total");
    return d;
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json rationals(const Weight& w) {
    return rationals(w.coords());
}

Json integers(const Cocharacter& l) {
    Json a = Json::array();
    for (auto x : l.coords()) a.push_back(x);
    return a;
}

Json dims_json(const DimVector& d) {
    if (d.vertices() == 1) return d[0];
    Json a = Json::array();
    for (int x : d.entries) a.push_back(x);
    return a;
}

Json parts_json(const PartitionA& a) {
    Json arr = Json::array();
    for (const Part& p : a.parts) arr.push_back(Json::array({dims_json(p.dims), p.w}));
    return arr;
}

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s;
}

std::string parts_tsv(const PartitionA& a) {
    std::string s;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        if (i) s += ",";
        s += to_string(a.parts[i].dims) + ":" + std::to_string(a.parts[i].w);
    }
    return s;
}

struct Common {
    std::string quiver = "tripled-jordan";
    std::string d;
    std::int64_t w = 0;
    std::string delta = "0";
    std::string format = "json";
};

void add_quiver(CLI::App* app, Common& c) {
    app->add_option("--quiver", c.quiver, "built-in name (jordan, doubled-jordan, tripled-jordan) or JSON path")
        ->capture_default_str();
}

void add_format(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
}

void add_delta(CLI::App* app, Common& c) {
    app->add_option("--delta", c.delta, "delta as a rational multiple of tau_d")->capture_default_str();
}

Weight delta_for(const Common& c, const DimVector& d) {
    return delta_multiple(d, parse_rational(c.delta));
}

Weight read_weight(const std::string& text, const std::string& dims) {
    return dims.empty() ? parse_weight(text) : parse_weight(text, parse_dims(dims));
}

Truncation make_trunc(const std::string& slope, int max_parts) {
    Truncation t;
    t.slope_bound = parse_rational(slope);
    if (t.slope_bound < 0) throw InputError("slope bound must be nonnegative");
    t.max_parts = max_parts;
    return t;
}

// ---------------------------------------------------------------- commands

void cmd_r_invariant(const Common& c, const std::string& weight, std::ostream& out) {
    const Quiver q = load_quiver(c.quiver);
    const Weight chi = read_weight(weight, c.d);
    q.check_dims(chi.dims());
    const WPolytope P = WPolytope::of(q, chi.dims());
    const Rational r = r_invariant(P, chi);
    Json j;
    j["r"] = to_string(r);
    j["lambda"] = (r > 0 && is_dominant(chi)) ? integers(face_cocharacter(P, chi, r)) : Json(nullptr);
    if (c.format == "tsv") {
        out << "r\t" << to_string(r) << "\n";
        if (!j["lambda"].is_null()) out << "lambda\t" << to_string(face_cocharacter(P, chi, r)) << "\n";
        return;
    }
    out << j.dump() << "\n";
}

void cmd_decompose(const Common& c, const std::string& weight, std::ostream& out) {
    const Quiver q = load_quiver(c.quiver);
    const Weight chi = read_weight(weight, c.d);
    q.check_dims(chi.dims());
    const StandardForm form = decompose(q, chi, delta_for(c, chi.dims()));
    const PartitionA A = partition_of(form);
    if (c.format == "tsv") {
        for (const FormNode& n : form.nodes) {
            out << "node\t" << to_string(n.lambda) << "\t" << to_string(n.r) << "\t" << join(n.N.coords()) << "\n";
        }
        out << "psi\t" << join(form.residual.coords()) << "\n";
        out << "A\t" << parts_tsv(A) << "\n";
        return;
    }
    Json nodes = Json::array();
    for (const FormNode& n : form.nodes) {
        Json node;
        node["lambda"] = integers(n.lambda);
        node["slots"] = n.slots;
        node["r"] = to_string(n.r);
        node["N"] = rationals(n.N);
        node["parent"] = n.parent;
        nodes.push_back(std::move(node));
    }
    Json j;
    j["nodes"] = std::move(nodes);
    j["psi"] = rationals(form.residual);
    j["A"] = parts_json(A);
    out << j.dump() << "\n";
}

void cmd_windows(const Common& c, std::optional<std::int64_t> bound, std::ostream& out) {
    const Quiver q = load_quiver(c.quiver);
    const DimVector d = parse_dims(c.d);
    PolytopeCache cache(q);
    for (const Weight& chi : window_generators(cache, d, c.w, delta_for(c, d), bound)) {
        if (c.format == "tsv") {
            out << join(chi.coords()) << "\n";
        } else {
            Json j;
            j["chi"] = rationals(chi);
            out << j.dump() << "\n";
        }
    }
}

void cmd_index_sets(const Common& c, const std::string& set, const Truncation& trunc, std::ostream& out) {
    const Quiver q = load_quiver(c.quiver);
    const DimVector d = parse_dims(c.d);
    IndexSet result;
    if (set == "U") {
        if (d.vertices() != 1) throw InputError("U is defined for one-vertex quivers");
        for (PartitionA& a : enum_U(d[0], c.w)) result.entries.push_back({std::move(a), {}, std::nullopt});
    } else if (set == "V") {
        if (d.vertices() != 1) throw InputError("V is defined for one-vertex quivers");
        result = enum_V(d[0], c.w, trunc);
    } else {
        PolytopeCache cache(q);
        result = set == "S" ? enum_S(cache, d, c.w, delta_for(c, d), trunc) : enum_T(cache, d, c.w, delta_for(c, d), trunc);
    }
    for (const IndexEntry& e : result.entries) {
        if (c.format == "tsv") {
            out << parts_tsv(e.A) << "\t" << join(e.r_sequence) << "\t"
                << (e.realizing_chi ? join(e.realizing_chi->coords()) : std::string("-")) << "\t"
                << (result.complete_within_bounds ? "complete" : "partial") << "\n";
            continue;
        }
        Json j;
        j["parts"] = parts_json(e.A);
        j["r_sequence"] = rationals(e.r_sequence);
        j["realizing_chi"] = e.realizing_chi ? rationals(*e.realizing_chi) : Json(nullptr);
        j["complete_within_bounds"] = result.complete_within_bounds;
        out << j.dump() << "\n";
    }
}

void cmd_compare(const Common& c, const std::string& set, const std::string& a, const std::string& b, std::ostream& out) {
    const PartitionA A = parse_partition(a);
    const PartitionA B = parse_partition(b);
    Verdict v;
    if (set == "V") {
        v = compare_v(A, B);
    } else {
        PolytopeCache cache(load_quiver(c.quiver));
        const DimVector d = A.total_dims();
        if (B.total_dims() != d || A.total_weight() != B.total_weight()) {
            throw InputError("partitions of different (d, w)");
        }
        v = compare(cache, A, B, delta_for(c, d));
    }
    if (c.format == "tsv") {
        out << to_string(v) << "\n";
        return;
    }
    Json j;
    j["verdict"] = to_string(v);
    out << j.dump() << "\n";
}

void cmd_pbw_table(const Common& c, int dmax, std::int64_t wmax, std::ostream& out) {
    PolytopeCache cache(Quiver::builtin("tripled-jordan"));
    if (c.quiver != "tripled-jordan") throw InputError("pbw-table is defined for the tripled Jordan quiver");
    const PbwTable t = primitive_dims(cache, dmax, wmax);
    if (c.format == "json") {
        Json rows = Json::array();
        for (const auto& [key, m] : t.m) {
            Json row;
            row["d"] = key.first;
            row["w"] = key.second;
            row["m"] = m.str();
            row["p"] = t.p.at(key).str();
            rows.push_back(std::move(row));
        }
        Json j;
        j["rows"] = std::move(rows);
        j["periodic"] = t.periodic;
        j["status"] = to_string(t.status);
        out << j.dump() << "\n";
    } else {
        out << "d\tw\tm\tp\n";
        for (const auto& [key, m] : t.m) {
            out << key.first << "\t" << key.second << "\t" << m.str() << "\t" << t.p.at(key).str() << "\n";
        }
        out << "status\t" << to_string(t.status) << "\n";
    }
    if (t.status != PbwStatus::OK) throw VerificationFailure("pbw table status " + to_string(t.status));
}

void cmd_verify_bijection(const Common& c, std::int64_t bound, std::ostream& out) {
    const Quiver q = load_quiver(c.quiver);
    const DimVector d = parse_dims(c.d);
    if (d.vertices() != 1) throw InputError("verify-bijection is defined for one-vertex quivers");
    PolytopeCache cache(q);
    const BijectionReport r = verify_bijection(cache, d[0], c.w, bound);
    if (c.format == "tsv") {
        out << "domain\t" << r.domain_size << "\nwindow_weights\t" << r.window_weights << "\npartitions\t" << r.partitions
            << "\npreimages_checked\t" << r.preimages_checked << "\nviolations\t" << r.violations.size() << "\n";
        for (const auto& v : r.violations) out << "violation\t" << v << "\n";
    } else {
        Json j;
        j["d"] = r.d;
        j["w"] = r.w;
        j["bound"] = r.bound;
        j["domain_size"] = r.domain_size;
        j["window_weights"] = r.window_weights;
        j["partitions"] = r.partitions;
        j["preimages_checked"] = r.preimages_checked;
        j["holds"] = r.holds();
        j["violations"] = r.violations;
        out << j.dump() << "\n";
    }
    if (!r.holds()) throw VerificationFailure("bijection check found " + std::to_string(r.violations.size()) + " violations");
}

void cmd_omega_shift(const Common& c, const std::string& partition, bool inverse, std::ostream& out) {
    const Quiver q = load_quiver(c.quiver);
    const PartitionA A = parse_partition(partition);
    q.check_dims(A.total_dims());
    const PartitionA B = inverse ? omega_unshift(q, A) : omega_shift(q, A);
    if (c.format == "tsv") {
        out << parts_tsv(B) << "\n";
        return;
    }
    Json j;
    j["parts"] = parts_json(B);
    out << j.dump() << "\n";
}

struct ShuffleArgs {
    std::string mode = "a2";
    std::vector<std::string> exprs;
    std::string at;
    std::string params;
    std::string x;
    std::string strategy = "exact";
    std::uint64_t seed = 1;
    int points = 5;
};

std::vector<Rational> param_values(const ShuffleArgs& s, const KernelParams& k) {
    if (k.mode == KernelMode::trivial && s.params.empty()) return {1, 1};
    const auto v = parse_list(s.params);
    if (v.size() != 2) throw InputError("--params needs two values");
    return v;
}

void emit_value(const Common& c, const Rational& v, std::ostream& out) {
    if (c.format == "tsv") {
        out << to_string(v) << "\n";
        return;
    }
    Json j;
    j["value"] = to_string(v);
    out << j.dump() << "\n";
}

void cmd_shuffle(const Common& c, const std::string& op, const ShuffleArgs& s, std::ostream& out) {
    const KernelParams k{parse_mode(s.mode)};
    auto need = [&](std::size_t n) {
        if (s.exprs.size() != n) throw InputError("shuffle " + op + " takes " + std::to_string(n) + " expression(s)");
    };
    if (op == "zeta") {
        emit_value(c, zeta(parse_rational(s.x), param_values(s, k), k), out);
    } else if (op == "eval") {
        need(1);
        const ShuffleElement f = parse_element(s.exprs[0], k);
        emit_value(c, f.eval(s.at.empty() ? std::vector<Rational>{} : parse_list(s.at), param_values(s, k)), out);
    } else if (op == "mul") {
        need(2);
        const ShuffleElement f = mul(parse_element(s.exprs[0], k), parse_element(s.exprs[1], k), k);
        if (c.format == "tsv") {
            out << f.degree() << "\t" << numerator_string(f, k) << "\t" << denominator_string(f, k) << "\n";
            return;
        }
        Json j;
        j["mode"] = to_string(k.mode);
        j["degree"] = f.degree();
        j["numerator"] = numerator_string(f, k);
        j["denominator"] = denominator_string(f, k);
        out << j.dump() << "\n";
    } else if (op == "equals") {
        need(2);
        EqualityOptions opts;
        opts.strategy = s.strategy == "exact" ? Strategy::exact : Strategy::probabilistic;
        opts.seed = s.seed;
        opts.points = s.points;
        const bool eq = equals(parse_element(s.exprs[0], k), parse_element(s.exprs[1], k), opts);
        if (c.format == "tsv") {
            out << (eq ? "true" : "false") << "\n";
        } else {
            Json j;
            j["equal"] = eq;
            j["strategy"] = s.strategy;
            out << j.dump() << "\n";
        }
        if (!eq) throw VerificationFailure("elements differ");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weight polytopes, standard forms, partition index sets and the shuffle algebra of the plane", "hallsod"};
    app.require_subcommand(1);
    Common c;
    std::function<void()> action;

    {
        auto* sub = app.add_subcommand("r-invariant", "r-invariant and face cocharacter of a weight");
        static std::string weight;
        weight.clear();
        add_quiver(sub, c);
        add_format(sub, c);
        sub->add_option("--d", c.d, "dimension vector, comma separated (inferred from the weight if omitted)");
        sub->add_option("--weight", weight, "comma separated slots, ';' between vertex blocks")->required();
        sub->callback([&] { action = [&] { cmd_r_invariant(c, weight, out); }; });
    }
    {
        auto* sub = app.add_subcommand("decompose", "standard form of chi + rho + delta");
        static std::string weight;
        weight.clear();
        add_quiver(sub, c);
        add_format(sub, c);
        add_delta(sub, c);
        sub->add_option("--d", c.d, "dimension vector");
        sub->add_option("--weight", weight, "dominant integral weight")->required();
        sub->callback([&] { action = [&] { cmd_decompose(c, weight, out); }; });
    }
    {
        auto* sub = app.add_subcommand("windows", "window generator weights");
        static std::optional<std::int64_t> bound;
        bound.reset();
        add_quiver(sub, c);
        add_format(sub, c);
        add_delta(sub, c);
        sub->add_option("--d", c.d, "dimension vector")->required();
        sub->add_option("--w", c.w, "total weight")->required();
        sub->add_option("--bound", bound, "coordinate bound (derived from the polytope if omitted)");
        sub->callback([&] { action = [&] { cmd_windows(c, bound, out); }; });
    }
    static std::string slope_bound;
    static int max_parts;
    slope_bound = "4";
    max_parts = 1 << 20;
    {
        auto* sub = app.add_subcommand("index-sets", "partition index sets S, T, U, V");
        static std::string set;
        set = "S";
        add_quiver(sub, c);
        add_format(sub, c);
        add_delta(sub, c);
        sub->add_option("--set", set, "S, T, U or V")->check(CLI::IsMember({"S", "T", "U", "V"}))->capture_default_str();
        sub->add_option("--d", c.d, "dimension vector")->required();
        sub->add_option("--w", c.w, "total weight")->required();
        sub->add_option("--slope-bound", slope_bound, "keep parts with |w_i/d_i - w/d| <= bound")->capture_default_str();
        sub->add_option("--max-parts", max_parts, "maximal number of parts");
        sub->callback([&] { action = [&] { cmd_index_sets(c, set, make_trunc(slope_bound, max_parts), out); }; });
    }
    {
        auto* sub = app.add_subcommand("compare", "order of two partitions in the semi-orthogonal decomposition");
        static std::string set, a, b;
        set = "S";
        a.clear();
        b.clear();
        add_quiver(sub, c);
        add_format(sub, c);
        add_delta(sub, c);
        sub->add_option("--set", set, "S (standard forms) or V (slope partitions)")
            ->check(CLI::IsMember({"S", "V"}))
            ->capture_default_str();
        sub->add_option("--a", a, "partition d:w,d:w,...")->required();
        sub->add_option("--b", b, "partition d:w,d:w,...")->required();
        sub->callback([&] { action = [&] { cmd_compare(c, set, a, b, out); }; });
    }
    {
        auto* sub = app.add_subcommand("pbw-table", "window counts m(d,w) and primitive dimensions p(d,w)");
        static int dmax;
        static std::int64_t wmax;
        static std::string format;
        dmax = 0;
        wmax = 0;
        format = "tsv";
        add_quiver(sub, c);
        sub->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
        sub->add_option("--dmax", dmax, "largest d")->required();
        sub->add_option("--wmax", wmax, "largest |w|")->required();
        sub->callback([&] {
            c.format = format;
            action = [&] { cmd_pbw_table(c, dmax, wmax, out); };
        });
    }
    {
        auto* sub = app.add_subcommand("verify-bijection", "weight-level check of the semi-orthogonal decomposition");
        static std::int64_t bound;
        bound = 8;
        add_quiver(sub, c);
        add_format(sub, c);
        sub->add_option("--d", c.d, "dimension")->required();
        sub->add_option("--w", c.w, "total weight")->required();
        sub->add_option("--bound", bound, "coordinate bound")->capture_default_str();
        sub->callback([&] { action = [&] { cmd_verify_bijection(c, bound, out); }; });
    }
    {
        auto* sub = app.add_subcommand("omega-shift", "twist a partition by omega_lambda");
        static std::string partition;
        static bool inverse;
        partition.clear();
        inverse = false;
        add_quiver(sub, c);
        add_format(sub, c);
        sub->add_option("--partition", partition, "partition d:w,d:w,...")->required();
        sub->add_flag("--inverse", inverse, "undo the twist");
        sub->callback([&] { action = [&] { cmd_omega_shift(c, partition, inverse, out); }; });
    }
    {
        auto* sub = app.add_subcommand("shuffle", "shuffle algebra: mul, eval, zeta, equals");
        sub->require_subcommand(1);
        static ShuffleArgs s;
        s = ShuffleArgs{};
        auto setup = [&](const std::string& name, const std::string& help) {
            auto* op = sub->add_subcommand(name, help);
            add_format(op, c);
            op->add_option("--mode", s.mode, "formal, a2 or trivial")
                ->check(CLI::IsMember({"formal", "a2", "trivial"}))
                ->capture_default_str();
            op->callback([&, name] { action = [&, name] { cmd_shuffle(c, name, s, out); }; });
            return op;
        };
        setup("mul", "product of two symmetric expressions")->add_option("exprs", s.exprs, "expressions")->expected(2);
        auto* ev = setup("eval", "evaluate an expression");
        ev->add_option("expr", s.exprs, "expression")->expected(1);
        ev->add_option("--at", s.at, "z values, comma separated");
        ev->add_option("--params", s.params, "kernel parameter values, comma separated")->required();
        auto* ze = setup("zeta", "evaluate the kernel");
        ze->add_option("--x", s.x, "evaluation point")->required();
        ze->add_option("--params", s.params, "kernel parameter values, comma separated")->required();
        auto* eq = setup("equals", "equality of two expressions; exit 2 when they differ");
        eq->add_option("exprs", s.exprs, "expressions")->expected(2);
        eq->add_option("--strategy", s.strategy, "exact or probabilistic")
            ->check(CLI::IsMember({"exact", "probabilistic"}))
            ->capture_default_str();
        eq->add_option("--seed", s.seed, "seed for probabilistic equality")->capture_default_str();
        eq->add_option("--points", s.points, "number of sample points")->capture_default_str();
    }

    std::vector<std::string> argv_store{"hallsod"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    try {
        if (action) action();
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const InvariantError& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}

}  // namespace hallsod::cli
