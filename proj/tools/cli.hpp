#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace ebinom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

// Runs one command line. `args` excludes the program name. Normal output
// goes to `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Empty cells render as "" in CSV and null in JSON. Strings carry exact
// integers and rationals so they never pass through a double.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    // Trailing key/value summary: a "# k=v,k=v" footer in CSV, top-level
    // fields next to "records" in JSON.
    std::vector<std::pair<std::string, Cell>> summary;
};

// %.17g; always enough digits to round-trip a double.
std::string format_double(double value);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

}  // namespace ebinom::cli
