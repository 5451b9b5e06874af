// Command-line front end: family selection, custom-ideal parsing, WLP/SLP
// reports, witness construction, parameter/prime sweeps.
//
// Exit codes: 0 = completed (whatever the mathematical verdicts), 1 = usage,
// parse, or dimension-cap error, 2 = internal invariant violation.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lefschetz/engine.hpp"
#include "lefschetz/report.hpp"

namespace lz = lefschetz;

namespace {

std::size_t env_max_dim() {
    if (const char* v = std::getenv("LEFSCHETZ_MAX_DIM")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(v, &end, 10);
        if (end == v || *end != '\0' || parsed == 0) {
            throw std::invalid_argument("LEFSCHETZ_MAX_DIM must be a positive integer");
        }
        return static_cast<std::size_t>(parsed);
    }
    return 20000;
}

struct IdealSource {
    std::string family;
    int r = 0, k = 0, d = 0, alpha = 0;
    std::vector<int> alphas;
    std::string ideal_text;

    // builds (spec, ideal); enforces exactly one source
    std::pair<lz::FamilySpec, lz::MonomialIdeal> resolve() const {
        const bool have_family = !family.empty();
        const bool have_text = !ideal_text.empty();
        if (have_family == have_text) {
            throw std::invalid_argument("give exactly one ideal source: --family or --ideal");
        }
        lz::FamilySpec spec;
        if (have_text) {
            if (r < 1) throw std::invalid_argument("--ideal needs --r");
            lz::MonomialIdeal I = lz::parse_ideal(ideal_text, r);
            spec.tag = lz::FamilyTag::Custom;
            spec.r = r;
            spec.custom_generators = I.generators();
            return {spec, I};
        }
        if (family == "uniform") {
            spec.tag = lz::FamilyTag::UniformKD;
            spec.r = r;
            spec.k = k;
            spec.d = d;
        } else if (family == "mixed") {
            spec.tag = lz::FamilyTag::MixedAlphaD;
            spec.alphas = alphas;
            spec.r = static_cast<int>(alphas.size());
            spec.d = d;
        } else if (family == "squares") {
            spec.tag = lz::FamilyTag::SquaresD;
            spec.r = r;
            spec.d = d;
        } else if (family == "j") {
            spec.tag = lz::FamilyTag::JAlpha;
            spec.r = r;
            spec.alpha = alpha;
        } else {
            throw std::invalid_argument("unknown family: " + family +
                                        " (expected uniform|mixed|squares|j)");
        }
        return {spec, spec.build()};
    }
};

void add_ideal_flags(CLI::App* cmd, IdealSource& src) {
    cmd->add_option("--family", src.family, "family: uniform|mixed|squares|j");
    cmd->add_option("--r", src.r, "number of variables");
    cmd->add_option("--k", src.k, "uniform exponent k");
    cmd->add_option("--d", src.d, "squarefree truncation degree d");
    cmd->add_option("--alpha", src.alpha, "J-family exponent alpha");
    cmd->add_option("--alphas", [&src](const std::vector<std::string>& vals) {
        src.alphas.clear();
        for (const auto& chunk : vals) {
            std::stringstream ss(chunk);
            std::string piece;
            while (std::getline(ss, piece, ',')) {
                if (!piece.empty()) src.alphas.push_back(std::stoi(piece));
            }
        }
        return true;
    }, "comma-separated exponents a1,...,ar");
    cmd->add_option("--ideal", src.ideal_text, "custom ideal text, e.g. \"x1^2, x2^2\"");
}

std::vector<lz::Characteristic> parse_chars(const std::vector<std::int64_t>& raw) {
    std::vector<lz::Characteristic> out;
    for (std::int64_t v : raw) out.push_back(lz::Characteristic::of(v));
    if (out.empty()) out.push_back(lz::Characteristic::zero());
    return out;
}

void write_output(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << bytes;
}

// Joins per-characteristic reports into one deterministic byte stream.
std::string combine_reports(const std::vector<lz::CheckReport>& reports,
                            lz::OutputFormat format) {
    if (format == lz::OutputFormat::Json) {
        if (reports.size() == 1) return lz::emit_report(reports[0], format);
        std::string out = "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::string one = lz::emit_report(reports[i], format);
            if (!one.empty() && one.back() == '\n') one.pop_back();
            out += one;
            if (i + 1 < reports.size()) out += ",";
            out += "\n";
        }
        out += "]\n";
        return out;
    }
    if (format == lz::OutputFormat::Csv) {
        std::string out;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::string one = lz::emit_report(reports[i], format);
            if (i > 0) {
                const std::size_t nl = one.find('\n');
                one = nl == std::string::npos ? "" : one.substr(nl + 1);
            }
            out += one;
        }
        return out;
    }
    std::string out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += "\n";
        out += lz::emit_report(reports[i], format);
    }
    return out;
}

std::string make_run_id(const lz::FamilySpec& spec, lz::Characteristic chr) {
    std::string id = spec.family_name() + ":r" + std::to_string(spec.r);
    if (spec.tag == lz::FamilyTag::UniformKD) id += ":k" + std::to_string(spec.k);
    if (spec.tag == lz::FamilyTag::MixedAlphaD) {
        id += ":a" + lz::alphas_string(spec.alphas, '-');
    }
    if (spec.d > 0) id += ":d" + std::to_string(spec.d);
    if (spec.tag == lz::FamilyTag::JAlpha) id += ":alpha" + std::to_string(spec.alpha);
    id += ":p" + chr.str();
    return id;
}

// --- single-ideal commands ---------------------------------------------------

struct CommonOpts {
    IdealSource src;
    std::vector<std::int64_t> chars;
    std::string format = "table";
    std::string out_path;
};

int run_check(const CommonOpts& opt, bool with_slp, bool hvector_only,
              bool socle_only) {
    const auto [spec, ideal] = opt.src.resolve();
    const auto format = lz::parse_format(opt.format);
    lz::CheckOptions copts;
    copts.max_dim = env_max_dim();
    std::vector<lz::CheckReport> reports;
    for (const auto chr : parse_chars(opt.chars)) {
        lz::CheckReport rep;
        rep.run_id = make_run_id(spec, chr);
        rep.family = spec;
        rep.ideal = ideal;
        rep.chr = chr;
        rep.h = lz::h_vector(ideal);
        if (hvector_only) {
            reports.push_back(std::move(rep));
            continue;
        }
        if (socle_only) {
            rep.socle_info = lz::socle(ideal);
            reports.push_back(std::move(rep));
            continue;
        }
        rep.socle_info = lz::socle(ideal);
        if (with_slp) {
            rep.slp = lz::slp_check(ideal, chr, copts);
        } else {
            rep.wlp = lz::wlp_check(ideal, chr, copts);
        }
        reports.push_back(std::move(rep));
    }
    write_output(combine_reports(reports, format), opt.out_path);
    return 0;
}

// --- witness command -----------------------------------------------------------

int run_witness(const std::string& theorem, const IdealSource& src, int prop_i,
                const std::vector<std::int64_t>& chars, const std::string& format_name,
                const std::string& out_path) {
    lz::Witness w;
    if (theorem == "a") {
        w = lz::witness_thmA(src.alphas, src.d);
    } else if (theorem == "b") {
        w = lz::witness_thmB(src.alphas, src.d);
    } else if (theorem == "c") {
        w = lz::witness_thmC(src.r, src.alpha);
    } else if (theorem == "prop") {
        w = lz::witness_prop(src.r, src.d, prop_i);
    } else {
        throw std::invalid_argument("unknown theorem: " + theorem +
                                    " (expected a|b|c|prop)");
    }
    const lz::MonomialIdeal ideal = w.family.build();
    std::vector<lz::Characteristic> chrs = {w.claimed_char};
    for (std::int64_t v : chars) {
        const auto c = lz::Characteristic::of(v);
        if (c != w.claimed_char) chrs.push_back(c);
    }
    std::vector<lz::CheckReport> reports;
    for (const auto chr : chrs) {
        lz::CheckReport rep;
        rep.run_id = make_run_id(w.family, chr);
        rep.family = w.family;
        rep.ideal = ideal;
        rep.chr = chr;
        rep.h = lz::h_vector(ideal);
        rep.witness = w;
        rep.verification = lz::verify_witness(ideal, chr, w);
        reports.push_back(std::move(rep));
    }
    write_output(combine_reports(reports, lz::parse_format(format_name)), out_path);
    return 0;
}

// --- identities command ----------------------------------------------------------

int run_identities(int r_max, const std::string& out_path) {
    std::ostringstream out;
    bool all_ok = true;
    for (int r = 3; r <= r_max; ++r) {
        const bool ok = lz::counting_identity_check(r, lz::IdentityKind::ThmA);
        all_ok = all_ok && ok;
        out << "thmA r=" << r << ": " << (ok ? "ok" : "FAIL") << "\n";
    }
    for (int r = 3; r <= r_max; ++r) {
        const bool ok = lz::counting_identity_check(r, lz::IdentityKind::ThmB);
        all_ok = all_ok && ok;
        out << "thmB r=" << r << ": " << (ok ? "ok" : "FAIL") << "\n";
    }
    for (int r = 4; r <= r_max; ++r) {
        const bool ok = lz::counting_identity_check(r, lz::IdentityKind::ThmC);
        all_ok = all_ok && ok;
        out << "thmC r=" << r << ": " << (ok ? "ok" : "FAIL") << "\n";
    }
    for (int r = 3; r <= r_max; ++r) {
        for (int i = 1; i <= (r + 1) / 2 && i + 1 <= r; ++i) {
            const bool ok = lz::counting_identity_check(r, lz::IdentityKind::Prop, i);
            all_ok = all_ok && ok;
            out << "prop r=" << r << " i=" << i << ": " << (ok ? "ok" : "FAIL") << "\n";
        }
    }
    out << (all_ok ? "all identities ok" : "IDENTITY FAILURES PRESENT") << "\n";
    write_output(out.str(), out_path);
    return 0;
}

// --- scan command ------------------------------------------------------------------

struct Range {
    int lo = 0, hi = -1;
};

Range parse_range(const std::string& text) {
    Range out;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        out.lo = out.hi = std::stoi(text);
    } else {
        out.lo = std::stoi(text.substr(0, dots));
        out.hi = std::stoi(text.substr(dots + 2));
    }
    return out;
}

struct ScanPoint {
    lz::FamilySpec spec;
    lz::Characteristic chr;
    std::string key;
};

std::string scan_csv_header() {
    return "run_id,family,r,d,k,alpha,char,status,first_failure,capped_at\n";
}

std::string scan_row_csv(const ScanPoint& pt, const lz::SurveyResult& res) {
    std::ostringstream out;
    out << pt.key << "," << pt.spec.family_name() << "," << pt.spec.r << ","
        << pt.spec.d << "," << pt.spec.k << "," << pt.spec.alpha << ","
        << pt.chr.str() << ",";
    switch (res.status) {
    case lz::SurveyStatus::Holds: out << "holds"; break;
    case lz::SurveyStatus::Fails: out << "fails"; break;
    case lz::SurveyStatus::Capped: out << "capped"; break;
    }
    out << ",";
    if (res.first_failure) out << *res.first_failure;
    out << ",";
    if (res.capped_at) out << *res.capped_at;
    out << "\n";
    return out.str();
}

int run_scan(const std::string& family, const std::string& r_range,
             const std::string& d_range, const std::string& k_range,
             const std::string& alpha_range, int primes_upto,
             const std::string& format_name, const std::string& out_path,
             unsigned jobs) {
    if (primes_upto < 2) throw std::invalid_argument("--primes-upto must be >= 2");
    const Range rr = parse_range(r_range);
    const Range dr = d_range.empty() ? Range{0, 0} : parse_range(d_range);
    const Range kr = k_range.empty() ? Range{0, 0} : parse_range(k_range);
    const Range ar = alpha_range.empty() ? Range{0, 0} : parse_range(alpha_range);

    std::vector<lz::Characteristic> chrs = {lz::Characteristic::zero()};
    for (int p = 2; p <= primes_upto; ++p) {
        if (lz::is_prime(static_cast<std::uint64_t>(p))) {
            chrs.push_back(lz::Characteristic::prime(static_cast<std::uint32_t>(p)));
        }
    }

    // enumerate points in deterministic key order
    std::vector<ScanPoint> points;
    for (int r = rr.lo; r <= rr.hi; ++r) {
        for (int d = dr.lo; d <= dr.hi; ++d) {
            for (int k = kr.lo; k <= kr.hi; ++k) {
                for (int alpha = ar.lo; alpha <= ar.hi; ++alpha) {
                    lz::FamilySpec spec;
                    spec.r = r;
                    if (family == "squares") {
                        if (d < 2 || d > r) continue;
                        spec.tag = lz::FamilyTag::SquaresD;
                        spec.d = d;
                    } else if (family == "uniform") {
                        if (d < 2 || d > r || k < 2) continue;
                        spec.tag = lz::FamilyTag::UniformKD;
                        spec.d = d;
                        spec.k = k;
                    } else if (family == "j") {
                        if (r < 4 || alpha < 5) continue;
                        spec.tag = lz::FamilyTag::JAlpha;
                        spec.alpha = alpha;
                    } else {
                        throw std::invalid_argument(
                            "scan supports --family squares|uniform|j");
                    }
                    for (const auto chr : chrs) {
                        points.push_back({spec, chr, make_run_id(spec, chr)});
                    }
                }
            }
        }
    }

    // resume: skip keys already present in the output file
    std::set<std::string> done;
    std::string previous;
    if (!out_path.empty()) {
        std::ifstream in(out_path);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty()) continue;
            if (line.rfind("run_id,", 0) != 0) {
                const auto comma = line.find(',');
                if (comma != std::string::npos) done.insert(line.substr(0, comma));
            }
            previous += line + "\n";
        }
    }

    std::vector<std::string> rows(points.size());
    std::atomic<std::size_t> next{0};
    const std::size_t cap = env_max_dim();
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= points.size()) return;
            const ScanPoint& pt = points[idx];
            if (done.count(pt.key)) continue;
            lz::SurveyOptions sopts;
            sopts.max_dim = cap;
            const lz::MonomialIdeal I = pt.spec.build();
            rows[idx] = scan_row_csv(pt, lz::wlp_survey(I, pt.chr, sopts));
        }
    };
    const unsigned n_jobs =
        jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n_jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::string body;
    for (const auto& row : rows) body += row;

    if (lz::parse_format(format_name) == lz::OutputFormat::Json) {
        // flat JSON array built from the same row fields
        std::string out = "[\n";
        bool first = true;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (rows[i].empty()) continue;
            std::string line = rows[i];
            if (!line.empty() && line.back() == '\n') line.pop_back();
            std::istringstream ss(line);
            std::string f[10];
            for (auto& fld : f) std::getline(ss, fld, ',');
            if (!first) out += ",\n";
            first = false;
            out += "  {\"run_id\":\"" + f[0] + "\",\"family\":\"" + f[1] +
                   "\",\"r\":" + f[2] + ",\"d\":" + f[3] + ",\"k\":" + f[4] +
                   ",\"alpha\":" + f[5] + ",\"char\":" + f[6] + ",\"status\":\"" +
                   f[7] + "\",\"first_failure\":" + (f[8].empty() ? "null" : f[8]) +
                   ",\"capped_at\":" + (f[9].empty() ? "null" : f[9]) + "}";
        }
        out += "\n]\n";
        write_output(out, out_path);
        return 0;
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << (previous.empty() ? scan_csv_header() : previous);
        f << body;
    } else {
        std::cout << scan_csv_header() << body;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak/strong Lefschetz property checker for Artinian monomial algebras"};
    app.require_subcommand(1);

    CommonOpts check_opt, hvec_opt, socle_opt, slp_opt;
    auto add_common = [](CLI::App* cmd, CommonOpts& o) {
        add_ideal_flags(cmd, o.src);
        cmd->add_option("--char", o.chars, "characteristic, 0 or a prime (repeatable)");
        cmd->add_option("--format", o.format, "output format: table|json|csv");
        cmd->add_option("--out", o.out_path, "write output to a file");
    };
    add_common(app.add_subcommand("check", "h-vector, socle, and WLP verdict"), check_opt);
    add_common(app.add_subcommand("hvector", "h-vector only"), hvec_opt);
    add_common(app.add_subcommand("socle", "socle dimensions and level check"), socle_opt);
    add_common(app.add_subcommand("slp", "strong Lefschetz check"), slp_opt);

    auto* wit_cmd = app.add_subcommand("witness", "construct and verify a failure witness");
    std::string theorem;
    int prop_i = 1;
    IdealSource wit_src;
    std::vector<std::int64_t> wit_chars;
    std::string wit_format = "table", wit_out;
    wit_cmd->add_option("--theorem", theorem, "a|b|c|prop")->required();
    add_ideal_flags(wit_cmd, wit_src);
    wit_cmd->add_option("--i", prop_i, "witness degree i (prop)");
    wit_cmd->add_option("--char", wit_chars, "extra characteristics to verify at");
    wit_cmd->add_option("--format", wit_format, "table|json|csv");
    wit_cmd->add_option("--out", wit_out, "write output to a file");

    auto* id_cmd = app.add_subcommand("identities", "verify the proofs' counting identities");
    int r_max = 12;
    std::string id_out;
    id_cmd->add_option("--r-max", r_max, "largest r to check (default 12)");
    id_cmd->add_option("--out", id_out, "write output to a file");

    auto* scan_cmd = app.add_subcommand("scan", "sweep families over parameter ranges");
    std::string scan_family, scan_r, scan_d, scan_k, scan_alpha;
    std::string scan_format = "csv", scan_out;
    int primes_upto = 7;
    unsigned jobs = 0;
    scan_cmd->add_option("--family", scan_family, "squares|uniform|j")->required();
    scan_cmd->add_option("--r", scan_r, "range, e.g. 4..10 or 6")->required();
    scan_cmd->add_option("--d", scan_d, "range for d (squares/uniform)");
    scan_cmd->add_option("--k", scan_k, "range for k (uniform)");
    scan_cmd->add_option("--alpha", scan_alpha, "range for alpha (j)");
    scan_cmd->add_option("--primes-upto", primes_upto, "sweep chars: 0 plus primes <= N");
    scan_cmd->add_option("--format", scan_format, "csv|json");
    scan_cmd->add_option("--out", scan_out, "output file (resumes by run key)");
    scan_cmd->add_option("--jobs", jobs, "worker threads (default: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("check")) return run_check(check_opt, false, false, false);
        if (app.got_subcommand("hvector")) return run_check(hvec_opt, false, true, false);
        if (app.got_subcommand("socle")) return run_check(socle_opt, false, false, true);
        if (app.got_subcommand("slp")) return run_check(slp_opt, true, false, false);
        if (app.got_subcommand("witness")) {
            return run_witness(theorem, wit_src, prop_i, wit_chars, wit_format, wit_out);
        }
        if (app.got_subcommand("identities")) return run_identities(r_max, id_out);
        if (app.got_subcommand("scan")) {
            return run_scan(scan_family, scan_r, scan_d, scan_k, scan_alpha,
                            primes_upto, scan_format, scan_out, jobs);
        }
        std::cerr << "no subcommand given\n";
        return 1;
    } catch (const lz::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const lz::NotArtinianError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const lz::DimensionCapExceeded& e) {
        std::cerr << "error: " << e.what()
                  << " (raise LEFSCHETZ_MAX_DIM to override)\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
