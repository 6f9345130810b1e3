#include "zzpa/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "zzpa/classify.hpp"
#include "zzpa/error.hpp"
#include "zzpa/render.hpp"
#include "zzpa/report.hpp"
#include "zzpa/salem.hpp"

namespace zzpa {

namespace {

IntPoly parse_coefficients(const std::string& text) {
    std::vector<Int> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item.empty()) continue;
        try {
            coeffs.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw input_error("bad coefficient '" + item + "'");
        }
    }
    if (coeffs.empty()) throw input_error("empty coefficient list");
    return IntPoly(std::move(coeffs));
}

Json lambda_json(const ZigZagMap& f) {
    return Json{{"minimal_polynomial", to_json(f.context()->minpoly())},
                {"decimal", f.lambda().decimal(kDecimalPlaces)}};
}

Json map_echo(const ZigZagMap& f) {
    return Json{{"m", f.m()},
                {"sign", f.sign()},
                {"standard", f.standard()},
                {"lambda", lambda_json(f)}};
}

void emit(std::ostream& out, const Json& report) {
    out << report.dump(2) << '\n';
}

struct SalemRange {
    int lo = 0;
    int hi = 0;
};

SalemRange parse_range(const std::string& text) {
    size_t sep = text.find("..");
    size_t skip = 2;
    if (sep == std::string::npos) {
        sep = text.find(':');
        skip = 1;
    }
    if (sep == std::string::npos) {
        throw input_error("range must look like g1..g2");
    }
    try {
        SalemRange r{std::stoi(text.substr(0, sep)),
                     std::stoi(text.substr(sep + skip))};
        if (r.lo < 1 || r.hi < r.lo) {
            throw input_error("range must satisfy 1 <= g1 <= g2");
        }
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("range must look like g1..g2");
    } catch (const std::out_of_range&) {
        throw input_error("range endpoints out of range");
    }
}

// Independent per-genus jobs; results are emitted in input order regardless
// of completion order.
std::vector<SalemReport> salem_batch(int lo, int hi) {
    int count = hi - lo + 1;
    std::vector<std::optional<SalemReport>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    unsigned hw = std::thread::hardware_concurrency();
    int workers = std::max(1, std::min<int>(count, hw ? hw : 1));
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    slots[i] = salem_report(lo + i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (int i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
    }
    std::vector<SalemReport> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

void salem_csv_row(std::ostream& out, const SalemReport& r) {
    out << r.g << ',' << r.lambda.decimal(kDecimalPlaces) << ','
        << r.d.degree() << ',' << r.unit_circle_roots << ','
        << r.singularities.one_prongs << ','
        << (r.singularities.double_cover_genus
                ? std::to_string(*r.singularities.double_cover_genus)
                : std::string("NA"))
        << ',' << r.singularities.trace_field_degree << ','
        << (r.is_salem ? "true" : "false") << '\n';
}

int cmd_construct(std::ostream& out, int m, const std::string& q, bool timings,
                  std::chrono::steady_clock::time_point t0) {
    BuiltMap built = build_zigzag(m, FractionLabel::parse(q));
    Json report = envelope("construct", Json{{"m", m}, {"q", q}});
    report["map"] = map_echo(built.map);
    report["digit_polynomial"] = to_json(built.closed_form);
    report["orbit"] = to_json(built.orbit);
    if (timings) {
        report["timings"] = Json{
            {"total_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count()}};
    }
    emit(out, report);
    return 0;
}

int cmd_digit_poly(std::ostream& out, int m, const std::string& q) {
    FractionLabel label = FractionLabel::parse(q);
    BuiltMap built = build_zigzag(m, label);  // walks and cross-checks
    Json report = envelope("digit-poly", Json{{"m", m}, {"q", q}});
    report["digit_polynomial"] = to_json(built.closed_form);
    report["reciprocal"] = is_reciprocal(built.closed_form);
    report["lambda"] = lambda_json(built.map);
    emit(out, report);
    return 0;
}

int cmd_check_pa(std::ostream& out, const ZigZagMap& f, Json input) {
    PAVerdict verdict = is_pA_type(f);
    Json report = envelope("check-pa", std::move(input));
    report["map"] = map_echo(f);
    report["pa"] = to_json(verdict);
    if (verdict.is_pa) {
        auto walked = orbit_of_one(f);
        report["singularities"] = to_json(
            singularity_report(f, std::get<PostcriticalData>(walked)));
    }
    emit(out, report);
    return 0;
}

int cmd_limit_set(std::ostream& out, int m, const std::string& q,
                  const std::string& svg_path) {
    BuiltMap built = build_zigzag(m, FractionLabel::parse(q));
    Json report = envelope("limit-set", Json{{"m", m}, {"q", q}});
    report["map"] = map_echo(built.map);
    NumericLimitSet numeric = limit_set_numeric(built.map);
    report["numeric"] = Json{{"verdict", numeric.verdict},
                             {"iterations", numeric.iterations}};
    auto ls = limit_set_exact(built.map);
    if (std::holds_alternative<LimitSet>(ls)) {
        const LimitSet& L = std::get<LimitSet>(ls);
        report["limit_set"] = to_json(L);
        if (!svg_path.empty()) {
            std::ofstream file(svg_path, std::ios::binary);
            if (!file) throw input_error("cannot open " + svg_path);
            file << render_limit_set_svg(L);
            report["svg"] = svg_path;
        }
    } else {
        report["limit_set"] = to_json(std::get<NotRectangular>(ls));
        if (!svg_path.empty()) {
            throw input_error("cannot render a non-rectangular limit set");
        }
    }
    emit(out, report);
    return 0;
}

int cmd_salem(std::ostream& out, int g, const std::string& range, bool csv,
              bool timings, std::chrono::steady_clock::time_point t0) {
    SalemRange r = range.empty() ? SalemRange{g, g} : parse_range(range);
    std::vector<SalemReport> reports = salem_batch(r.lo, r.hi);
    if (csv) {
        out << "g,lambda,degree,unit_circle_roots,one_prongs,"
               "double_cover_genus,trace_field_degree,is_salem\n";
        for (const SalemReport& s : reports) salem_csv_row(out, s);
        return 0;
    }
    Json input = range.empty() ? Json{{"g", g}} : Json{{"range", range}};
    Json report = envelope("salem", std::move(input));
    if (reports.size() == 1) {
        report["salem"] = to_json(reports[0]);
    } else {
        Json arr = Json::array();
        for (const SalemReport& s : reports) arr.push_back(to_json(s));
        report["salem"] = std::move(arr);
    }
    if (timings) {
        report["timings"] = Json{
            {"total_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count()}};
    }
    emit(out, report);
    return 0;
}

int cmd_experiment(std::ostream& out, int m, int bmax) {
    if (m < 2) throw input_error("experiment needs modality m >= 2");
    if (bmax < 2) throw input_error("experiment needs --bmax >= 2");
    struct Row {
        Rat q;
        Int a, b;
        AlgebraicReal lambda;
    };
    std::vector<Row> rows;
    for (int b = 2; b <= bmax; ++b) {
        for (int a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            IntPoly D = digit_poly_from_fraction(m, FractionLabel(a, b));
            rows.push_back(Row{Rat(a, b), a, b, perron_root(D)});
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& x, const Row& y) { return x.q < y.q; });
    int agree = 0;
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].lambda.compare(rows[i + 1].lambda) < 0) ++agree;
    }
    out << "m,a,b,q,lambda\n";
    for (const Row& r : rows) {
        out << m << ',' << r.a.get_str() << ',' << r.b.get_str() << ','
            << rat_string(r.q) << ',' << r.lambda.decimal(kDecimalPlaces)
            << '\n';
    }
    out << "# adjacent order agreement: " << agree << "/"
        << (rows.empty() ? 0 : rows.size() - 1) << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"zig-zag maps, limit sets, and the Salem family"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --timings follow the subcommand name
    bool timings = false;
    app.add_flag("--timings", timings, "add wall-clock timings to reports");

    int m = 0;
    std::string q;
    auto* construct = app.add_subcommand(
        "construct", "build a family map from its invariant and verify it");
    construct->add_option("-m,--modality", m, "number of critical points")
        ->required();
    construct->add_option("-q,--invariant", q, "fraction a/b in (0,1)")
        ->required();

    auto* digit = app.add_subcommand(
        "digit-poly", "digit polynomial of a family member");
    digit->add_option("-m,--modality", m)->required();
    digit->add_option("-q,--invariant", q)->required();

    std::string poly_text;
    int sign = 1;
    auto* check = app.add_subcommand(
        "check-pa", "decide pseudo-Anosov type for a PCP zig-zag map");
    check->add_option("-m,--modality", m)->required();
    check->add_option("-q,--invariant", q,
                      "family member by invariant fraction");
    check->add_option("--poly", poly_text,
                      "ascending integer coefficients of a polynomial "
                      "with the growth rate as largest root");
    check->add_option("--sign", sign, "+1 rising first, -1 falling first");

    std::string svg_path;
    auto* limit = app.add_subcommand(
        "limit-set", "exact Galois-lift limit set of a family member");
    limit->add_option("-m,--modality", m)->required();
    limit->add_option("-q,--invariant", q)->required();
    limit->add_option("--svg", svg_path, "also write an SVG figure here");

    int g = 0;
    std::string range;
    bool csv = false;
    auto* salem = app.add_subcommand(
        "salem", "certify Salem numbers of the genus-g family");
    salem->add_option("-g,--genus", g, "single genus");
    salem->add_option("--range", range, "genus range g1..g2");
    salem->add_flag("--csv", csv, "tabular output instead of JSON");

    int bmax = 0;
    auto* experiment = app.add_subcommand(
        "experiment", "lambda versus invariant table for one modality");
    experiment->add_option("-m,--modality", m)->required();
    experiment->add_option("--bmax", bmax, "largest denominator")->required();

    auto t0 = std::chrono::steady_clock::now();
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            throw input_error(e.what());
        }

        if (*construct) return cmd_construct(out, m, q, timings, t0);
        if (*digit) return cmd_digit_poly(out, m, q);
        if (*check) {
            if (!q.empty() && poly_text.empty()) {
                BuiltMap built = build_zigzag(m, FractionLabel::parse(q));
                return cmd_check_pa(out, built.map,
                                    Json{{"m", m}, {"q", q}});
            }
            if (q.empty() && !poly_text.empty()) {
                IntPoly p = parse_coefficients(poly_text);
                ZigZagMap f = ZigZagMap::make(m, sign, perron_root(p));
                return cmd_check_pa(out, f,
                                    Json{{"m", m},
                                         {"sign", sign},
                                         {"poly", to_json(p)}});
            }
            throw input_error(
                "check-pa needs exactly one of --invariant or --poly");
        }
        if (*limit) return cmd_limit_set(out, m, q, svg_path);
        if (*salem) {
            if ((g >= 1) == !range.empty()) {
                throw input_error(
                    "salem needs exactly one of --genus or --range");
            }
            return cmd_salem(out, g, range, csv, timings, t0);
        }
        if (*experiment) return cmd_experiment(out, m, bmax);
        throw input_error("no command given");
    } catch (const input_error& e) {
        err << Json{{"error", {{"type", "input_error"},
                               {"message", e.what()}}}}
                   .dump(2)
            << '\n';
        return 2;
    } catch (const verification_error& e) {
        err << Json{{"error", {{"type", "verification_error"},
                               {"message", e.what()}}}}
                   .dump(2)
            << '\n';
        return 1;
    } catch (const undecided_error& e) {
        err << Json{{"error", {{"type", "undecided_error"},
                               {"message", e.what()}}}}
                   .dump(2)
            << '\n';
        return 3;
    }
}

}  // namespace zzpa
