#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebinom/cumulants.hpp"
#include "ebinom/error.hpp"
#include "ebinom/exact_core.hpp"
#include "ebinom/expansion.hpp"
#include "ebinom/harness.hpp"

namespace ebinom::cli {

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("cannot format double");
    return std::string(buf, end);
}

namespace {

std::string csv_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    auto join = [&](const auto& cells, auto&& render) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << render(cells[i]);
        }
        out << '\n';
    };
    join(table.columns, [](const std::string& s) { return s; });
    for (const auto& row : table.rows) join(row, csv_cell);
    if (!table.summary.empty()) {
        out << "# ";
        join(table.summary, [](const auto& kv) { return kv.first + "=" + csv_cell(kv.second); });
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
        records.push_back(std::move(obj));
    }
    if (table.summary.empty()) {
        out << records.dump(2) << '\n';
        return;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.summary) doc[key] = json_cell(value);
    doc["records"] = std::move(records);
    out << doc.dump(2) << '\n';
}

namespace {

struct Options {
    bool json = false;
    bool csv = false;

    long long n = 0;
    long long k = 0;
    long long q = 0;
    int order = 1;
    bool terms = false;
    std::string n_list = "50,100,200,400";
    std::string out_path;
    int max_order = 8;
    bool oracle = false;
    int nu = 1;
};

int checked_int(long long value, const char* name) {
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
        throw DomainError(std::string(name) + " is out of range");
    }
    return static_cast<int>(value);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw DomainError("not an integer in --n-list: '" + item + "'");
        }
        values.push_back(v);
    }
    return values;
}

void emit(const Table& table, const Options& opt, std::ostream& out) {
    if (opt.json) write_json(table, out);
    else write_csv(table, out);
}

void cmd_coeff(const Options& opt, std::ostream& out) {
    const int n = checked_int(opt.n, "n");
    const int q = checked_int(opt.q, "q");
    const BigInt c = coefficient(n, opt.k, q);
    if (!opt.json) {
        out << to_string(c) << '\n';
        return;
    }
    nlohmann::ordered_json doc = {{"n", n}, {"k", opt.k}, {"q", q}, {"coefficient", to_string(c)}};
    out << doc.dump(2) << '\n';
}

void cmd_row(const Options& opt, std::ostream& out) {
    const BigRow row = compute_row(checked_int(opt.n, "n"), checked_int(opt.q, "q"));
    Table table{{"k", "coefficient"}, {}, {}};
    table.rows.reserve(row.coeffs.size());
    for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
        table.rows.push_back({static_cast<std::int64_t>(k), to_string(row.coeffs[k])});
    }
    emit(table, opt, out);
}

void cmd_expand(const Options& opt, std::ostream& out) {
    const int n = checked_int(opt.n, "n");
    const int q = checked_int(opt.q, "q");
    const TruncatedExpansion expansion(q, opt.order);
    const double x = standardize(n, opt.k, q).x;
    const double exact = exact_scaled(n, opt.k, q);
    const double approx = expansion(n, opt.k);
    const double abs_error = std::abs(exact - approx);

    if (!opt.terms) {
        Table table{{"n", "k", "q", "order", "x", "exact", "approximation", "abs_error"}, {}, {}};
        table.rows.push_back({std::int64_t{n}, opt.k, std::int64_t{q}, std::int64_t{opt.order}, x,
                              exact, approx, abs_error});
        emit(table, opt, out);
        return;
    }

    const std::vector<double> terms = expansion.terms(n, opt.k);
    Table table{{"term", "nu", "value"}, {}, {}};
    table.rows.push_back({std::string("gaussian"), std::int64_t{0}, terms[0]});
    for (std::size_t nu = 1; nu < terms.size(); ++nu) {
        table.rows.push_back({std::string("correction"), static_cast<std::int64_t>(nu), terms[nu]});
    }
    table.rows.push_back({std::string("total"), std::monostate{}, approx});
    table.summary = {{"n", std::int64_t{n}}, {"k", opt.k},       {"q", std::int64_t{q}},
                     {"x", x},               {"exact", exact},   {"abs_error", abs_error}};
    emit(table, opt, out);
}

void cmd_sweep(const Options& opt, std::ostream& out) {
    const std::vector<int> n_list = parse_int_list(opt.n_list);
    const SweepReport report = rate_sweep(checked_int(opt.q, "q"), opt.order, n_list);
    Table table{{"n", "sup_error", "argmax_k"}, {}, {}};
    for (const SweepRecord& r : report.records) {
        table.rows.push_back({std::int64_t{r.n}, r.sup_error, r.argmax_k});
    }
    if (opt.json) {
        table.summary = {{"q", std::int64_t{report.q}},
                         {"order", std::int64_t{report.nu_max}},
                         {"fitted_slope", report.fitted_slope},
                         {"slope_stderr", report.slope_stderr}};
    } else {
        table.summary = {{"fitted_slope", report.fitted_slope}, {"stderr", report.slope_stderr}};
    }

    if (opt.out_path.empty()) {
        emit(table, opt, out);
        return;
    }
    std::ofstream file(opt.out_path);
    if (!file) throw std::runtime_error("cannot open '" + opt.out_path + "' for writing");
    emit(table, opt, file);
    if (!file.flush()) throw std::runtime_error("failed writing '" + opt.out_path + "'");
}

void cmd_cumulants(const Options& opt, std::ostream& out) {
    const int q = checked_int(opt.q, "q");
    const CumulantVector closed = cumulants_up_to(opt.max_order, q);
    Table table;
    if (opt.oracle) {
        const CumulantVector check = oracle_cumulants(opt.max_order, q);
        table.columns = {"k", "gamma", "oracle_gamma", "match"};
        for (int k = 1; k <= closed.max_order(); ++k) {
            table.rows.push_back({std::int64_t{k}, to_string(closed.gamma(k)),
                                  to_string(check.gamma(k)), closed.gamma(k) == check.gamma(k)});
        }
    } else {
        table.columns = {"k", "gamma"};
        for (int k = 1; k <= closed.max_order(); ++k) {
            table.rows.push_back({std::int64_t{k}, to_string(closed.gamma(k))});
        }
    }
    emit(table, opt, out);
}

void cmd_qpoly(const Options& opt, std::ostream& out) {
    const GaussPolyFn fn = build_q_even(opt.nu, checked_int(opt.q, "q"));
    Table table{{"power", "coefficient"}, {}, {}};
    const auto& coeffs = fn.poly().coefficients();
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
        if (coeffs[p] == 0) continue;
        table.rows.push_back({static_cast<std::int64_t>(p), to_string(coeffs[p])});
    }
    emit(table, opt, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extended binomial coefficients: exact values and their asymptotic expansion",
                 "ebinom"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "Emit JSON instead of CSV/plain text");

    std::function<void(const Options&, std::ostream&)> action;

    auto* coeff = app.add_subcommand("coeff", "Exact coefficient binom(n,k)^(q)");
    coeff->add_option("n", opt.n)->required();
    coeff->add_option("k", opt.k)->required();
    coeff->add_option("q", opt.q)->required();
    coeff->callback([&] { action = cmd_coeff; });

    auto* row = app.add_subcommand("row", "Full coefficient row k = 0..nq");
    row->add_option("n", opt.n)->required();
    row->add_option("q", opt.q)->required();
    row->add_flag("--csv", opt.csv, "CSV output (the default)");
    row->callback([&] { action = cmd_row; });

    auto* expand = app.add_subcommand("expand", "Truncated expansion of sigma sqrt(n) p_n(k)");
    expand->add_option("n", opt.n)->required();
    expand->add_option("k", opt.k)->required();
    expand->add_option("q", opt.q)->required();
    expand->add_option("--order", opt.order, "Number of correction terms")->capture_default_str();
    expand->add_flag("--terms", opt.terms, "List each term of the expansion");
    expand->callback([&] { action = cmd_expand; });

    auto* sweep = app.add_subcommand("sweep", "Sup-over-k error and log-log rate over n");
    sweep->add_option("q", opt.q)->required();
    sweep->add_option("--order", opt.order, "Number of correction terms")->capture_default_str();
    sweep->add_option("--n-list", opt.n_list, "Comma-separated increasing n values")
        ->capture_default_str();
    sweep->add_option("--out", opt.out_path, "Write to this file instead of stdout");
    sweep->callback([&] { action = cmd_sweep; });

    auto* cumulants = app.add_subcommand("cumulants", "Cumulants of the uniform law on {0..q}");
    cumulants->add_option("q", opt.q)->required();
    cumulants->add_option("--max-order", opt.max_order, "Highest cumulant order")
        ->capture_default_str();
    cumulants->add_flag("--oracle", opt.oracle, "Add moment-recursion cross-check columns");
    cumulants->callback([&] { action = cmd_cumulants; });

    auto* qpoly = app.add_subcommand("qpoly", "Exact polynomial factor of q_{2nu}");
    qpoly->add_option("q", opt.q)->required();
    qpoly->add_option("--nu", opt.nu, "Correction index nu >= 1")->capture_default_str();
    qpoly->callback([&] { action = cmd_qpoly; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "ebinom: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        action(opt, out);
    } catch (const std::exception& e) {
        err << "ebinom: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace ebinom::cli
