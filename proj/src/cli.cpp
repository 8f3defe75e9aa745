#include "splitgen/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "splitgen/ideal.hpp"
#include "splitgen/io.hpp"
#include "splitgen/points.hpp"
#include "splitgen/split.hpp"
#include "splitgen/verify.hpp"

namespace splitgen {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// seed 0 keeps the canonical parameters 0..count-1; any other seed draws
// distinct pseudo-random parameters so reruns stay byte-identical.
std::vector<FieldElement> moment_params(std::size_t count, const FieldSpec& field,
                                        std::uint64_t seed) {
    std::uint64_t range = field.kind == FieldKind::PrimeField ? field.modulus : 1000003ull;
    if (count > range) throw Error("field too small");
    std::vector<FieldElement> out;
    out.reserve(count);
    if (seed == 0) {
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(FieldElement::from_integer(static_cast<long>(i), field));
        return out;
    }
    std::uint64_t state = seed;
    std::set<std::uint64_t> seen;
    while (out.size() < count) {
        std::uint64_t v = splitmix64(state) % range;
        if (seen.insert(v).second)
            out.push_back(FieldElement::from_integer(static_cast<long>(v), field));
    }
    return out;
}

PointSet moment_set(unsigned n, std::size_t d, const FieldSpec& field, std::uint64_t seed) {
    return moment_curve_points(n, field, moment_params(d, field, seed));
}

PointSet load_points(const std::string& in_path, unsigned n, long d, const std::string& field_tag,
                     std::uint64_t seed) {
    if (!in_path.empty()) return point_set_from_json(read_text_file(in_path));
    if (n == 0 || d < 0) throw Error("need --in or both --n and --d");
    return moment_set(n, static_cast<std::size_t>(d), FieldSpec::from_tag(field_tag), seed);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

std::string sanitize(const std::string& tag) {
    std::string s = tag;
    std::replace(s.begin(), s.end(), ':', '-');
    return s;
}

unsigned ceil_div(std::size_t a, unsigned b) {
    return static_cast<unsigned>((a + b - 1) / b);
}

// ---------------------------------------------------------------- grid ----

struct GridRow {
    unsigned n;
    std::size_t d;
    unsigned m;
    std::string field;
    std::string claim;
    std::string passed;
};

struct CellResult {
    std::vector<GridRow> rows;
    // path (relative to the output dir) -> canonical JSON content
    std::vector<std::pair<std::string, std::string>> files;
};

struct GridCell {
    unsigned n;
    std::size_t d;
    unsigned m;
    FieldSpec field;
};

CellResult run_cell(const GridCell& cell, std::uint64_t seed, bool want_files) {
    CellResult result;
    const std::string tag = cell.field.tag();
    const std::string suffix = "-n" + std::to_string(cell.n) + "-d" + std::to_string(cell.d) +
                               "-m" + std::to_string(cell.m) + "-" + sanitize(tag);

    auto record = [&](const std::string& claim, const std::string& passed) {
        result.rows.push_back(GridRow{cell.n, cell.d, cell.m, tag, claim, passed});
    };
    auto attempt = [&](const std::string& claim, auto&& body) {
        try {
            VerifyReport report = body();
            record(claim, report.passed ? "true" : "false");
            if (want_files)
                result.files.emplace_back("reports/" + claim + suffix + ".json",
                                          report_to_json(report));
        } catch (const std::exception& e) {
            record(claim, "error");
            std::ostringstream note;
            note << "error n=" << cell.n << " d=" << cell.d << " m=" << cell.m << " field=" << tag
                 << " claim=" << claim << ": " << e.what() << "\n";
            std::cerr << note.str();
        }
    };

    PointSet gamma = moment_set(cell.n, cell.d, cell.field, seed);
    attempt("span", [&] { return verify_span_theorem(gamma, cell.m); });
    attempt("mult", [&] { return verify_multiplication(gamma, cell.m); });
    attempt("main", [&] {
        Certificate cert = generating_set(gamma, cell.m);
        if (want_files)
            result.files.emplace_back("certs/cert" + suffix + ".json", certificate_to_json(cert));
        return verify_main(cert, cell.m + 2);
    });
    attempt("lemma-sum", [&] {
        PointSet gamma0 = moment_set(cell.n, cell.d + 2, cell.field, seed);
        unsigned l = std::max(cell.m, ceil_div(cell.d + 1, cell.n));
        return verify_lemma_sum(gamma0, gamma0.size() - 2, gamma0.size() - 1, l);
    });
    return result;
}

int run_grid(const std::vector<unsigned>& n_list, const std::vector<unsigned>& m_list,
             const std::vector<std::size_t>& d_list, const std::vector<std::string>& field_tags,
             std::uint64_t seed, unsigned jobs, const std::string& out_dir) {
    std::vector<GridCell> cells;
    for (unsigned n : n_list) {
        for (unsigned m : m_list) {
            std::vector<std::size_t> ds;
            if (d_list.empty()) {
                for (std::size_t d = static_cast<std::size_t>(m - 1) * n + 1;
                     d <= static_cast<std::size_t>(m) * n; ++d)
                    ds.push_back(d);
            } else {
                for (std::size_t d : d_list) {
                    if (d > static_cast<std::size_t>(m) * n) {
                        std::cerr << "skip n=" << n << " d=" << d << " m=" << m
                                  << ": d > mn\n";
                        continue;
                    }
                    ds.push_back(d);
                }
            }
            for (std::size_t d : ds)
                for (const auto& tag : field_tags)
                    cells.push_back(GridCell{n, d, m, FieldSpec::from_tag(tag)});
        }
    }

    const bool want_files = !out_dir.empty();
    std::vector<CellResult> results(cells.size());
    if (jobs <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            results[i] = run_cell(cells[i], seed, want_files);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                results[i] = run_cell(cells[i], seed, want_files);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, cells.size()); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<GridRow> rows;
    for (const auto& r : results) rows.insert(rows.end(), r.rows.begin(), r.rows.end());
    std::sort(rows.begin(), rows.end(), [](const GridRow& a, const GridRow& b) {
        return std::tie(a.n, a.d, a.m, a.field, a.claim) <
               std::tie(b.n, b.d, b.m, b.field, b.claim);
    });

    std::ostringstream csv;
    csv << "n,d,m,field,claim,passed\n";
    bool all_passed = true;
    for (const auto& r : rows) {
        csv << r.n << "," << r.d << "," << r.m << "," << r.field << "," << r.claim << ","
            << r.passed << "\n";
        all_passed = all_passed && r.passed == "true";
    }

    std::cout << csv.str();
    if (want_files) {
        namespace fs = std::filesystem;
        fs::create_directories(fs::path(out_dir) / "reports");
        fs::create_directories(fs::path(out_dir) / "certs");
        write_text_file((fs::path(out_dir) / "summary.csv").string(), csv.str());
        for (const auto& cell : results)
            for (const auto& [rel, content] : cell.files)
                write_text_file((fs::path(out_dir) / rel).string(), content);
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"vanishing ideals of point sets via completely decomposable forms"};
    app.require_subcommand(1);

    unsigned n = 0, m = 0, l = 0, max_degree = 0, jobs = 1;
    long d = -1;
    std::uint64_t seed = 0;
    std::string field_tag = "q", in_path, out_path, out_dir, target;
    long x_index = -1, y_index = -1;
    std::vector<unsigned> n_list, m_list;
    std::vector<std::size_t> d_list;
    std::vector<std::string> field_tags{"q", "fp:32003"};

    auto* points_gen = app.add_subcommand("points-gen", "write a moment-curve point set");
    points_gen->add_option("--n", n)->required();
    points_gen->add_option("--d", d)->required();
    points_gen->add_option("--field", field_tag);
    points_gen->add_option("--seed", seed);
    points_gen->add_option("--out", out_path);

    auto* check_lgp = app.add_subcommand("check-lgp", "test linearly general position");
    check_lgp->add_option("--in", in_path)->required();

    auto* ideal_dim_cmd = app.add_subcommand("ideal-dim", "dimension of a vanishing-ideal piece");
    ideal_dim_cmd->add_option("--in", in_path);
    ideal_dim_cmd->add_option("--n", n);
    ideal_dim_cmd->add_option("--d", d);
    ideal_dim_cmd->add_option("--field", field_tag);
    ideal_dim_cmd->add_option("--seed", seed);
    ideal_dim_cmd->add_option("--l", l)->required();

    auto* split_count = app.add_subcommand("split-count", "split variety degree");
    split_count->add_option("--n", n)->required();
    split_count->add_option("--l", l)->required();

    auto* split_sigma = app.add_subcommand("split-sigma", "equal-block generator list");
    split_sigma->add_option("--in", in_path);
    split_sigma->add_option("--n", n);
    split_sigma->add_option("--d", d);
    split_sigma->add_option("--field", field_tag);
    split_sigma->add_option("--seed", seed);
    split_sigma->add_option("--m", m)->required();
    split_sigma->add_option("--out", out_path);

    auto* gens_make = app.add_subcommand("gens-make", "build a generating-set certificate");
    gens_make->add_option("--in", in_path);
    gens_make->add_option("--n", n);
    gens_make->add_option("--d", d);
    gens_make->add_option("--field", field_tag);
    gens_make->add_option("--seed", seed);
    gens_make->add_option("--m", m)->required();
    gens_make->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "check one claim and write a report");
    verify->add_option("--target", target)
        ->required()
        ->check(CLI::IsMember({"span", "mult", "main", "lemma-sum"}));
    verify->add_option("--in", in_path);
    verify->add_option("--n", n);
    verify->add_option("--d", d);
    verify->add_option("--field", field_tag);
    verify->add_option("--seed", seed);
    verify->add_option("--l", l);
    verify->add_option("--m", m);
    verify->add_option("--max-degree", max_degree);
    verify->add_option("--x", x_index);
    verify->add_option("--y", y_index);
    verify->add_option("--out", out_path);

    auto* grid = app.add_subcommand("grid", "verify all claims over a parameter grid");
    grid->add_option("--n", n_list)->required()->delimiter(',');
    grid->add_option("--m", m_list)->required()->delimiter(',');
    grid->add_option("--d", d_list)->delimiter(',');
    grid->add_option("--fields", field_tags)->delimiter(',');
    grid->add_option("--seed", seed);
    grid->add_option("--jobs", jobs);
    grid->add_option("--out-dir", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (points_gen->parsed()) {
            if (d < 0) throw Error("d must be nonnegative");
            PointSet gamma = moment_set(n, static_cast<std::size_t>(d),
                                        FieldSpec::from_tag(field_tag), seed);
            emit(out_path, point_set_to_json(gamma));
            return 0;
        }
        if (check_lgp->parsed()) {
            bool ok = is_lgp(point_set_from_json(read_text_file(in_path)));
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }
        if (ideal_dim_cmd->parsed()) {
            PointSet gamma = load_points(in_path, n, d, field_tag, seed);
            std::cout << ideal_dim(gamma, l) << "\n";
            return 0;
        }
        if (split_count->parsed()) {
            std::cout << split_degree(n, l).get_str() << "\n";
            return 0;
        }
        if (split_sigma->parsed()) {
            if (in_path.empty() && d < 0) d = static_cast<long>(m) * n;
            PointSet gamma = load_points(in_path, n, d, field_tag, seed);
            emit(out_path, sigma_to_json(gamma, m, sigma_generators(gamma, m)));
            return 0;
        }
        if (gens_make->parsed()) {
            PointSet gamma = load_points(in_path, n, d, field_tag, seed);
            Certificate cert = generating_set(gamma, m);
            emit(out_path, certificate_to_json(cert));
            return cert.passed ? 0 : 1;
        }
        if (verify->parsed()) {
            VerifyReport report{"", 0, 0, 0, FieldSpec::rationals(), {}, false};
            if (target == "span") {
                if (l == 0) throw Error("span needs --l");
                report = verify_span_theorem(load_points(in_path, n, d, field_tag, seed), l);
            } else if (target == "mult") {
                if (m < 2) throw Error("mult needs --m");
                report = verify_multiplication(load_points(in_path, n, d, field_tag, seed), m);
            } else if (target == "main") {
                if (m < 2) throw Error("main needs --m");
                PointSet gamma = load_points(in_path, n, d, field_tag, seed);
                report = verify_main(gamma, m, max_degree == 0 ? m + 2 : max_degree);
            } else {
                PointSet gamma0 = in_path.empty()
                                      ? load_points(in_path, n, d < 0 ? d : d + 2, field_tag, seed)
                                      : point_set_from_json(read_text_file(in_path));
                if (gamma0.size() < 2) throw Error("point set too small");
                std::size_t x = x_index < 0 ? gamma0.size() - 2 : static_cast<std::size_t>(x_index);
                std::size_t y = y_index < 0 ? gamma0.size() - 1 : static_cast<std::size_t>(y_index);
                unsigned use_l = l != 0 ? l : ceil_div(gamma0.size() - 1, gamma0.n());
                report = verify_lemma_sum(gamma0, x, y, use_l);
            }
            emit(out_path, report_to_json(report));
            return report.passed ? 0 : 1;
        }
        if (grid->parsed())
            return run_grid(n_list, m_list, d_list, field_tags, seed, jobs, out_dir);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace splitgen
