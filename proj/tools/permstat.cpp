// Command line front end: exact distribution polynomials from brute
// enumeration (oracle), closed-form polynomials (formula), theorem
// verification suites (verify), and descent tables (table).

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permstat/jsonio.hpp"
#include "permstat/verify/suites.hpp"

using namespace permstat;
namespace pv = permstat::verify;

namespace {

struct Options {
    std::string command;
    int n = -1;
    int n_max = 8;
    int k_max = 5;
    int deg_max = 8;
    int ribbon_deg = 6;
    int t_prec = 0;  // 0: derived as n + 4
    std::string family = "all";
    std::string profile = "pkdes";
    std::string id;
    std::string suite = "all";
    std::string format = "json";
    std::string kind = "descents";
    std::string out;
    int threads = 0;
    bool unsafe_n = false;
};

FamilySpec parse_family(const std::string& text) {
    if (text == "all") return FamilySpec::all();
    if (text == "cyclic") return FamilySpec::cyclic();
    if (text == "involutions") return FamilySpec::involutions();
    if (text == "derangements") return FamilySpec::derangements();
    if (text.rfind("ctype:", 0) == 0) {
        std::vector<uint32_t> parts;
        std::string body = text.substr(6);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            parts.push_back(static_cast<uint32_t>(std::stoul(body.substr(pos, comma - pos))));
            pos = comma + 1;
        }
        return FamilySpec::cycle_type(Partition(std::move(parts)));
    }
    if (text.rfind("fix:", 0) == 0)
        return FamilySpec::fix_count(static_cast<uint32_t>(std::stoul(text.substr(4))));
    throw std::invalid_argument("unknown family: " + text +
                                " (expected all|cyclic|involutions|derangements|ctype:..|fix:k)");
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + opt.out);
        f << payload;
        if (!payload.empty() && payload.back() != '\n') f << "\n";
    }
}

OracleConfig oracle_config(const Options& opt) {
    OracleConfig cfg;
    cfg.cap = opt.unsafe_n ? kMaxEnumN : 9;
    cfg.threads = opt.threads;
    return cfg;
}

int cmd_oracle(const Options& opt) {
    if (opt.n < 1) throw std::invalid_argument("oracle requires --n >= 1");
    DistPoly d = oracle_dist(static_cast<uint32_t>(opt.n), parse_family(opt.family),
                             DistProfile::parse(opt.profile), oracle_config(opt));
    emit(opt, opt.format == "csv" ? "profile," + d.profile + "\n" + to_csv(d.poly) : to_json(d));
    return 0;
}

// Closed-form registry: everything here is computed without enumeration.
int cmd_formula(const Options& opt) {
    static const std::vector<std::string> known = {"eulerian:A", "eulerian:B", "thm:cycpkdes",
                                                   "cor:cycpk-a", "cor:cycpk-b"};
    if (opt.n < 0) throw std::invalid_argument("formula requires --n");
    uint32_t n = static_cast<uint32_t>(opt.n);
    int prec = opt.t_prec > 0 ? opt.t_prec : opt.n + 4;
    MultiPoly poly;
    if (opt.id == "eulerian:A") {
        poly = eulerian_A(n);
    } else if (opt.id == "eulerian:B") {
        poly = eulerian_B(n);
    } else if (opt.id == "thm:cycpkdes" || opt.id == "cor:cycpk-a") {
        if (n < 1) throw std::invalid_argument("requires n >= 1");
        pv::TSeries C = pv::cycpkdes_via_uv(n, prec);
        for (int j = static_cast<int>(n) + 1; j < prec; ++j)
            if (!C.coeff(j).is_zero())
                throw std::runtime_error("inversion tail is nonzero; raise --t-prec");
        poly = pv::series_to_poly(C, static_cast<int>(n));
        if (opt.id == "cor:cycpk-a")
            poly = poly.substitute(
                {{vars::t(), MultiPoly::constant(1)}, {vars::y(), MultiPoly::var(vars::t())}});
    } else if (opt.id == "cor:cycpk-b") {
        if (n < 1) throw std::invalid_argument("requires n >= 1");
        MultiPoly t = MultiPoly::var(vars::t());
        MultiPoly sum;
        for (uint32_t d : divisors_of(n)) {
            int mu = mobius(d);
            if (mu == 0) continue;
            sum += (MultiPoly::constant(1) - t).pow(n - n / d) * eulerian_A(n / d) * rat(mu);
        }
        poly = sum * rat(1, static_cast<long>(n));
    } else {
        std::string list;
        for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
        throw std::invalid_argument("unknown formula id '" + opt.id + "'; valid ids: " + list);
    }
    std::string meta = "{\"id\":\"" + json_escape(opt.id) + "\",\"n\":" + std::to_string(opt.n) +
                       ",\"t_prec\":" + std::to_string(prec) + ",\"poly\":" + to_json(poly) + "}";
    emit(opt, opt.format == "csv" ? to_csv(poly) : meta);
    return 0;
}

int cmd_verify(const Options& opt) {
    pv::SuiteConfig cfg;
    cfg.n_max = opt.n_max;
    cfg.k_max = opt.k_max;
    cfg.deg_max = opt.deg_max;
    cfg.ribbon_deg = opt.ribbon_deg;
    cfg.oracle = oracle_config(opt);
    cfg.gr_n_max = std::min<uint32_t>(cfg.gr_n_max, static_cast<uint32_t>(cfg.oracle.cap));
    auto reports = pv::run_suite(opt.suite, cfg);
    std::string payload;
    bool all_pass = true;
    long total_ms = 0;
    for (const auto& r : reports) {
        payload += to_json(r) + "\n";
        all_pass = all_pass && r.pass;
        total_ms += r.ms;
    }
    emit(opt, payload);
    std::cerr << (all_pass ? "PASS" : "FAIL") << ": " << reports.size() << " checks in "
              << total_ms << " ms\n";
    return all_pass ? 0 : 1;
}

int cmd_table(const Options& opt) {
    if (opt.n < 1) throw std::invalid_argument("table requires --n >= 1");
    if (opt.kind == "descents") {
        auto table = descent_table(static_cast<uint32_t>(opt.n), parse_family(opt.family),
                                   oracle_config(opt));
        emit(opt, to_csv(table));
        return 0;
    }
    if (opt.kind == "dist") {
        DistPoly d = oracle_dist(static_cast<uint32_t>(opt.n), parse_family(opt.family),
                                 DistProfile::parse(opt.profile), oracle_config(opt));
        emit(opt, "profile," + d.profile + "\n" + to_csv(d.poly));
        return 0;
    }
    throw std::invalid_argument("unknown table kind: " + opt.kind + " (descents|dist)");
}

void load_config(const std::string& path, Options& opt) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    f >> j;
    auto get = [&j](const char* key, auto& target) {
        if (j.contains(key)) target = j.at(key).get<std::decay_t<decltype(target)>>();
    };
    get("command", opt.command);
    get("n", opt.n);
    get("n_max", opt.n_max);
    get("k_max", opt.k_max);
    get("deg_max", opt.deg_max);
    get("ribbon_deg", opt.ribbon_deg);
    get("t_prec", opt.t_prec);
    get("family", opt.family);
    get("profile", opt.profile);
    get("id", opt.id);
    get("suite", opt.suite);
    get("format", opt.format);
    get("kind", opt.kind);
    get("out", opt.out);
    get("threads", opt.threads);
    get("unsafe_n", opt.unsafe_n);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    // --config provides defaults; explicit flags override them.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                load_config(argv[i + 1], opt);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
    }

    CLI::App app{"exact permutation-statistic distributions via symmetric functions"};
    app.require_subcommand(0, 1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path);
        sub->add_option("--out", opt.out, "write output to a file");
        sub->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--threads", opt.threads, "parallelism width (0 = auto)");
        sub->add_flag("--unsafe-n", opt.unsafe_n, "raise the enumeration cap to n=10");
    };

    CLI::App* oracle = app.add_subcommand("oracle", "joint distribution by enumeration");
    oracle->add_option("--n", opt.n);
    oracle->add_option("--family", opt.family);
    oracle->add_option("--profile", opt.profile);
    add_common(oracle);

    CLI::App* formula = app.add_subcommand("formula", "closed-form polynomial by theorem id");
    formula->add_option("--id", opt.id);
    formula->add_option("--n", opt.n);
    formula->add_option("--t-prec", opt.t_prec);
    add_common(formula);

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", opt.suite)->check(CLI::IsMember(pv::suite_names()));
    verify->add_option("--n-max", opt.n_max);
    verify->add_option("--k-max", opt.k_max);
    verify->add_option("--deg-max", opt.deg_max);
    verify->add_option("--ribbon-deg", opt.ribbon_deg);
    add_common(verify);

    CLI::App* table = app.add_subcommand("table", "CSV tables by composition or exponent");
    table->add_option("--n", opt.n);
    table->add_option("--family", opt.family);
    table->add_option("--kind", opt.kind);
    table->add_option("--profile", opt.profile);
    add_common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (oracle->parsed()) return cmd_oracle(opt);
        if (formula->parsed()) return cmd_formula(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (table->parsed()) return cmd_table(opt);
        if (!opt.command.empty()) {
            if (opt.command == "oracle") return cmd_oracle(opt);
            if (opt.command == "formula") return cmd_formula(opt);
            if (opt.command == "verify") return cmd_verify(opt);
            if (opt.command == "table") return cmd_table(opt);
            throw std::invalid_argument("unknown command in config: " + opt.command);
        }
        std::cerr << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
