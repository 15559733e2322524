#include "upq/cli.hpp"

#include "upq/certificate.hpp"
#include "upq/json_io.hpp"
#include "upq/milnor_wood.hpp"
#include "upq/oracle.hpp"
#include "upq/slope.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace upq::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) parts.push_back(item);
    if (!text.empty() && text.back() == ',') parts.emplace_back();
    return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("malformed integer '" + text + "' in " + what);
    }
}

Rational parse_rational(const std::string& text, const std::string& what) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(what + ": " + e.what());
    }
}

HitchinPairType parse_type(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 4) throw UsageError("--type expects p,q,a,b; got '" + text + "'");
    HitchinPairType t{parse_int(parts[0], "--type"), parse_int(parts[1], "--type"), parse_int(parts[2], "--type"),
                      parse_int(parts[3], "--type")};
    if (t.p < 1 || t.q < 1) throw UsageError("--type needs p >= 1 and q >= 1");
    return t;
}

AlphaInterval parse_interval(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 2) throw UsageError("--interval expects lo,hi; got '" + text + "'");
    AlphaInterval interval{parse_rational(parts[0], "--interval"), parse_rational(parts[1], "--interval")};
    if (interval.lo > interval.hi) throw UsageError("--interval has lo > hi");
    return interval;
}

HiggsRankPair parse_ranks(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 2) throw UsageError("--ranks expects rk_beta,rk_gamma; got '" + text + "'");
    return HiggsRankPair{parse_int(parts[0], "--ranks"), parse_int(parts[1], "--ranks")};
}

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw UsageError("unknown output format '" + text + "' (expected json or csv)");
}

const std::map<std::string, Command>& command_names() {
    static const std::map<std::string, Command> names = {
        {"toledo", Command::toledo}, {"mw", Command::mw},           {"walls", Command::walls},
        {"chambers", Command::chambers}, {"certify", Command::certify}, {"selftest", Command::selftest},
    };
    return names;
}

std::string csv_rational(const Rational& r) { return r.numerator_string() + "," + r.denominator_string(); }

std::string csv_bool(bool b) { return b ? "true" : "false"; }

WallOptions wall_options(const RunConfig& c) {
    WallOptions opts;
    opts.mw_filter = c.mw_filter;
    opts.ctx = c.ctx;
    opts.threads = c.threads;
    return opts;
}

json context_json(const RunConfig& c) { return c.ctx ? json(*c.ctx) : json(nullptr); }

std::string render_toledo(const RunConfig& c) {
    const auto& t = *c.type;
    const auto tau = toledo(t);
    if (c.output_format == OutputFormat::csv) {
        std::ostringstream os;
        os << "p,q,a,b,tau_num,tau_den\n"
           << t.p << "," << t.q << "," << t.a << "," << t.b << "," << csv_rational(tau) << "\n";
        return os.str();
    }
    json j{{"type", t}, {"tau", tau}};
    if (c.alpha) {
        j["alpha"] = *c.alpha;
        j["alpha_slope"] = alpha_slope(t, *c.alpha);
        j["c_pair"] = alpha_to_c_pair(t, *c.alpha);
    }
    return j.dump(2) + "\n";
}

std::string render_mw(const RunConfig& c) {
    const auto v = mw_check(*c.type, c.ctx->twist_degree(), *c.alpha, c.ranks);
    if (c.output_format == OutputFormat::csv) {
        std::ostringstream os;
        const auto& b = v.interval;
        os << "tau_num,tau_den,feasible,lower_num,lower_den,upper_num,upper_den,regime,verdict,side,margin_num,"
              "margin_den\n"
           << csv_rational(v.tau) << "," << csv_bool(b.feasible()) << "," << csv_rational(b.raw_lower()) << ","
           << csv_rational(b.raw_upper()) << "," << (b.regime() ? regime_label(*b.regime()) : "") << ","
           << (v.pass ? "pass" : "fail") << "," << (v.violated ? side_label(*v.violated) : "") << ","
           << csv_rational(v.margin) << "\n";
        return os.str();
    }
    json j{{"type", *c.type},
           {"context", context_json(c)},
           {"alpha", *c.alpha},
           {"ranks", c.ranks ? json(*c.ranks) : json(nullptr)}};
    const json verdict = v;
    for (const auto& [key, value] : verdict.items()) j[key] = value;
    return j.dump(2) + "\n";
}

std::string walls_csv(const std::vector<Wall>& walls) {
    std::ostringstream os;
    os << "alpha_num,alpha_den,p_sub,q_sub,d_sub\n";
    for (const auto& w : walls) {
        for (const auto& x : w.witnesses) {
            os << csv_rational(w.alpha) << "," << x.p_sub << "," << x.q_sub << "," << x.d_sub << "\n";
        }
    }
    return os.str();
}

std::string render_walls(const RunConfig& c) {
    const auto walls = enumerate_walls(*c.type, *c.interval, wall_options(c));
    if (c.output_format == OutputFormat::csv) return walls_csv(walls);
    auto j = walls_document(*c.type, *c.interval, walls);
    j["mw_filter"] = c.mw_filter;
    j["context"] = context_json(c);
    return j.dump(2) + "\n";
}

std::string render_chambers(const RunConfig& c) {
    const auto report = chamber_report(*c.type, *c.interval, wall_options(c));
    if (c.output_format == OutputFormat::csv) {
        // Walls and chambers interleaved in parameter order.
        std::ostringstream os;
        os << "kind,lo_num,lo_den,hi_num,hi_den,lo_closed,hi_closed,witness_count\n";
        std::size_t wi = 0;
        for (const auto& ch : report.chambers) {
            while (wi < report.walls.size() && report.walls[wi].alpha <= ch.lo) {
                const auto& w = report.walls[wi++];
                os << "wall," << csv_rational(w.alpha) << "," << csv_rational(w.alpha) << ",true,true,"
                   << w.witnesses.size() << "\n";
            }
            os << "chamber," << csv_rational(ch.lo) << "," << csv_rational(ch.hi) << "," << csv_bool(ch.lo_closed)
               << "," << csv_bool(ch.hi_closed) << ",0\n";
        }
        for (; wi < report.walls.size(); ++wi) {
            const auto& w = report.walls[wi];
            os << "wall," << csv_rational(w.alpha) << "," << csv_rational(w.alpha) << ",true,true,"
               << w.witnesses.size() << "\n";
        }
        return os.str();
    }
    json j = report;
    j["mw_filter"] = c.mw_filter;
    j["context"] = context_json(c);
    return j.dump(2) + "\n";
}

std::string render_certify(const RunConfig& c) {
    const auto cert = certify_irreducibility(*c.type, *c.genus, *c.alpha);
    if (c.output_format == OutputFormat::csv) {
        std::ostringstream os;
        os << "field,value\n";
        os << "tau," << cert.tau << "\n"
           << "tau_bound," << cert.tau_bound << "\n"
           << "tau_bound_ok," << csv_bool(cert.tau_bound_ok) << "\n"
           << "condition1," << csv_bool(cert.condition1.holds) << "\n"
           << "condition2," << csv_bool(cert.condition2.holds) << "\n"
           << "closure_irreducible," << csv_bool(cert.closure_irreducible) << "\n"
           << "fully_irreducible," << csv_bool(cert.fully_irreducible) << "\n";
        return os.str();
    }
    return json(cert).dump(2) + "\n";
}

std::string render_selftest(const RunConfig& c, bool& ok) {
    const auto report = oracle::property_driver(c.seed, c.trials, c.threads);
    ok = report.ok();
    if (c.output_format == OutputFormat::csv) {
        std::ostringstream os;
        os << "suite,cases,passed,failed\n";
        for (const auto& s : report.suites) {
            os << s.name << "," << s.cases << "," << s.passed << "," << s.failures.size() << "\n";
        }
        return os.str();
    }
    return json(report).dump(2) + "\n";
}

std::string render_impl(const RunConfig& config, bool& ok) {
    ok = true;
    switch (config.command) {
        case Command::toledo: return render_toledo(config);
        case Command::mw: return render_mw(config);
        case Command::walls: return render_walls(config);
        case Command::chambers: return render_chambers(config);
        case Command::certify: return render_certify(config);
        case Command::selftest: return render_selftest(config, ok);
    }
    throw std::logic_error("unknown command");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args, const std::optional<std::string>& default_format) {
    CLI::App app{"Exact stability, Toledo bounds and wall-crossing for U(p,q)-Hitchin pairs", "upq"};
    std::string command;
    std::string type_text;
    std::string interval_text;
    std::string alpha_text;
    std::string ranks_text;
    std::string format_text;
    std::string output_path;
    std::int64_t genus = 0;
    std::int64_t deg_l = 0;
    bool canonical = false;
    bool mw_filter = false;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;

    app.add_option("command", command, "toledo | mw | walls | chambers | certify | selftest")->required();
    auto* type_opt = app.add_option("--type", type_text, "numerical type p,q,a,b");
    auto* interval_opt = app.add_option("--interval", interval_text, "closed alpha interval lo,hi");
    auto* alpha_opt = app.add_option("--alpha", alpha_text, "stability parameter (integer or num/den)");
    auto* genus_opt = app.add_option("--genus", genus, "genus g of the curve");
    auto* degl_opt = app.add_option("--degL", deg_l, "degree of the twisting line bundle");
    auto* canonical_opt = app.add_flag("--canonical", canonical, "twist by K, i.e. degL = 2g-2 (needs --genus)");
    auto* ranks_opt = app.add_option("--ranks", ranks_text, "Higgs field ranks rk_beta,rk_gamma (mw)");
    app.add_flag("--mw-filter", mw_filter, "keep only witnesses with a sub-type inside the Toledo bounds");
    auto* format_opt = app.add_option("--format", format_text, "json (default) or csv");
    auto* output_opt = app.add_option("--output,-o", output_path, "write the report to this file");
    app.add_option("--threads", threads, "worker threads for wall enumeration (0 = all cores)");
    app.add_option("--seed", seed, "selftest seed");
    auto* trials_opt = app.add_option("--trials", trials, "selftest trials per suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig c;
    auto it = command_names().find(command);
    if (it == command_names().end()) throw UsageError("unknown command '" + command + "'");
    c.command = it->second;

    if (*type_opt) c.type = parse_type(type_text);
    if (*interval_opt) c.interval = parse_interval(interval_text);
    if (*alpha_opt) c.alpha = parse_rational(alpha_text, "--alpha");
    if (*ranks_opt) c.ranks = parse_ranks(ranks_text);
    if (*genus_opt) {
        if (genus < 0) throw UsageError("--genus must be non-negative");
        c.genus = genus;
    }
    if (*canonical_opt && *degl_opt) throw UsageError("--canonical and --degL are mutually exclusive");
    if (*canonical_opt) {
        if (!c.genus) throw UsageError("--canonical requires --genus");
        c.ctx = GeometryContext::canonical(*c.genus);
    } else if (*degl_opt) {
        c.ctx = GeometryContext::twisted(c.genus.value_or(0), deg_l);
    }
    c.mw_filter = mw_filter;
    if (*format_opt) {
        c.output_format = parse_format(format_text);
    } else if (default_format && !default_format->empty()) {
        c.output_format = parse_format(*default_format);
    }
    if (*output_opt) c.output_path = output_path;
    c.threads = threads;
    c.seed = seed;
    c.trials = trials;

    const std::string name = command;
    auto need = [&](bool present, const std::string& what) {
        if (!present) throw UsageError(name + " requires " + what);
    };
    if (c.command != Command::selftest) need(c.type.has_value(), "--type");
    switch (c.command) {
        case Command::toledo: break;
        case Command::mw:
            need(c.ctx.has_value(), "--degL or --canonical");
            need(c.alpha.has_value(), "--alpha");
            if (c.ranks) {
                try {
                    c.ranks->validate_for(*c.type);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
            break;
        case Command::walls:
        case Command::chambers:
            need(c.interval.has_value(), "--interval");
            if (c.mw_filter) {
                need(c.ctx.has_value(), "--degL or --canonical when --mw-filter is set");
                if (c.ctx->twist_degree() < 0) throw UsageError("--mw-filter needs degL >= 0");
            }
            break;
        case Command::certify:
            need(c.genus.has_value(), "--genus");
            need(c.alpha.has_value(), "--alpha");
            if (c.ctx && c.ctx->twist_degree() != 2 * *c.genus - 2) {
                throw UsageError("certify concerns K-twisted pairs; --degL must equal 2g-2");
            }
            break;
        case Command::selftest:
            if (*trials_opt && trials == 0) throw UsageError("--trials must be at least 1");
            break;
    }
    return c;
}

std::string render(const RunConfig& config) {
    bool ok = true;
    return render_impl(config, ok);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::string text;
    bool ok = true;
    try {
        text = render_impl(config, ok);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_engine_error;
    }
    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary);
        if (!file || !(file << text)) {
            err << "error: cannot write " << *config.output_path << "\n";
            return exit_engine_error;
        }
    } else {
        out << text;
    }
    if (!ok) {
        err << "selftest: invariant failures recorded in the report\n";
        return exit_engine_error;
    }
    return exit_ok;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        const char* env = std::getenv(format_env_var);
        config = parse_args(args, env ? std::optional<std::string>(env) : std::nullopt);
    } catch (const HelpRequested& help) {
        out << help.what();
        return exit_ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    return run(config, out, err);
}

}  // namespace upq::cli
