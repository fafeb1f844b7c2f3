#include "dwigner/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "dwigner/error.hpp"
#include "numfmt.hpp"

namespace dwig {

namespace {

using json = nlohmann::json;

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double read_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw parse_error(where + ": expected a number, got " + std::string(v.type_name()));
    double x = v.get<double>();
    if (!std::isfinite(x)) throw parse_error(where + ": value is not finite");
    return x;
}

void read_part(const json& rows, int n, const std::string& field, std::vector<double>& out) {
    if (!rows.is_array()) throw parse_error("field \"" + field + "\": expected an array of rows");
    if (static_cast<int>(rows.size()) != n)
        throw parse_error("field \"" + field + "\": expected " + std::to_string(n) + " rows, got " +
                          std::to_string(rows.size()));
    for (int i = 0; i < n; ++i) {
        const json& row = rows[i];
        std::string where = field + "[" + std::to_string(i) + "]";
        if (!row.is_array()) throw parse_error(where + ": expected an array");
        if (static_cast<int>(row.size()) != n)
            throw parse_error(where + ": expected " + std::to_string(n) + " entries, got " +
                              std::to_string(row.size()));
        for (int j = 0; j < n; ++j) out[i * n + j] = read_number(row[j], where + "[" + std::to_string(j) + "]");
    }
}

double parse_double(std::string_view s, int line) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    double x = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw parse_error("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string_view> fields_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Rows of numbers, indices first and value last.
std::vector<std::vector<double>> table_rows(std::string_view text, grid_format fmt) {
    std::vector<std::vector<double>> rows;
    int line = 0;
    bool header_seen = false;
    for (auto raw : split(text, '\n')) {
        ++line;
        if (fmt == grid_format::gnuplot) {
            if (!raw.empty() && raw.front() == '#') continue;
            auto f = fields_ws(raw);
            if (f.empty()) continue;
            std::vector<double> row;
            for (auto x : f) row.push_back(parse_double(x, line));
            rows.push_back(std::move(row));
            continue;
        }
        if (raw.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        if (!header_seen) {
            header_seen = true;
            if (raw.substr(0, 2) == "mu") continue;
        }
        std::vector<double> row;
        for (auto x : split(raw, ',')) row.push_back(parse_double(x, line));
        rows.push_back(std::move(row));
    }
    return rows;
}

int as_index(double x, int n, std::size_t row) {
    if (x != std::floor(x) || x < 0 || x >= n)
        throw parse_error("row " + std::to_string(row + 1) + ": index " + format_double(x) + " outside [0, " +
                          std::to_string(n) + ")");
    return static_cast<int>(x);
}

any_grid grid_from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw parse_error("grid has no rows");
    std::size_t width = rows.front().size();
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].size() != width)
            throw parse_error("row " + std::to_string(r + 1) + ": expected " + std::to_string(width) + " columns, got " +
                              std::to_string(rows[r].size()));
    if (width == 5) {
        if (rows.size() != 16) throw parse_error("pair grid needs 16 rows, got " + std::to_string(rows.size()));
        pair_grid g;
        std::array<bool, 16> seen{};
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int idx = pair_grid::index(as_index(rows[r][0], 2, r), as_index(rows[r][1], 2, r),
                                       as_index(rows[r][2], 2, r), as_index(rows[r][3], 2, r));
            if (seen[idx]) throw parse_error("row " + std::to_string(r + 1) + ": repeated point");
            seen[idx] = true;
            g.values[idx] = rows[r][4];
        }
        return g;
    }
    if (width != 3) throw parse_error("expected 3 or 5 columns, got " + std::to_string(width));
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rows.size()))));
    if (n < 1 || static_cast<std::size_t>(n) * n != rows.size())
        throw parse_error("row count " + std::to_string(rows.size()) + " is not a square");
    wigner_grid g{n, std::vector<double>(rows.size())};
    std::vector<bool> seen(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int idx = as_index(rows[r][0], n, r) * n + as_index(rows[r][1], n, r);
        if (seen[idx]) throw parse_error("row " + std::to_string(r + 1) + ": repeated point");
        seen[idx] = true;
        g.values[idx] = rows[r][2];
    }
    return g;
}

}  // namespace

std::string format_double(double x) {
    if (x == 0) x = 0;  // no "-0"
    return detail::shortest(x);
}

cmatrix parse_matrix(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": malformed JSON");
    }
    if (!doc.is_object()) throw parse_error("expected a JSON object with fields \"dim\", \"re\", \"im\"");
    if (!doc.contains("dim")) throw parse_error("missing field \"dim\"");
    const json& d = doc["dim"];
    if (!d.is_number_integer() || d.get<long long>() < 1)
        throw parse_error("field \"dim\": expected a positive integer");
    int n = d.get<int>();
    if (!doc.contains("re")) throw parse_error("missing field \"re\"");
    std::vector<double> re(n * n), im(n * n, 0.0);
    read_part(doc["re"], n, "re", re);
    if (doc.contains("im")) read_part(doc["im"], n, "im", im);
    cmatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = complex(re[i * n + j], im[i * n + j]);
    return m;
}

std::string serialize_matrix(const cmatrix& m) {
    int n = m.dim();
    std::ostringstream os;
    auto part = [&](bool imag) {
        os << '[';
        for (int i = 0; i < n; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < n; ++j) {
                if (j) os << ", ";
                os << format_double(imag ? m(i, j).imag() : m(i, j).real());
            }
            os << ']';
        }
        os << ']';
    };
    os << "{\"dim\": " << n << ", \"re\": ";
    part(false);
    os << ", \"im\": ";
    part(true);
    os << "}\n";
    return os.str();
}

grid_format parse_grid_format(std::string_view tag) {
    if (tag == "csv") return grid_format::csv;
    if (tag == "json") return grid_format::json;
    if (tag == "gnuplot") return grid_format::gnuplot;
    throw domain_error("unknown grid format '" + std::string(tag) + "'");
}

std::string emit_grid(const wigner_grid& w, grid_format fmt) {
    std::ostringstream os;
    int n = w.dim;
    switch (fmt) {
    case grid_format::csv:
        os << "mu,nu,w\n";
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu) os << mu << ',' << nu << ',' << format_double(w(mu, nu)) << '\n';
        break;
    case grid_format::gnuplot:
        os << "# mu nu w\n";
        for (int mu = 0; mu < n; ++mu) {
            if (mu) os << '\n';
            for (int nu = 0; nu < n; ++nu) os << mu << ' ' << nu << ' ' << format_double(w(mu, nu)) << '\n';
        }
        break;
    case grid_format::json:
        os << "{\"dim\": " << n << ", \"rows\": [";
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu)
                os << (mu || nu ? ", " : "") << '[' << mu << ", " << nu << ", " << format_double(w(mu, nu)) << ']';
        os << "]}\n";
        break;
    }
    return os.str();
}

std::string emit_grid(const pair_grid& w, grid_format fmt) {
    std::ostringstream os;
    bool first = true;
    switch (fmt) {
    case grid_format::csv:
        os << "mu1,nu1,mu2,nu2,w\n";
        break;
    case grid_format::gnuplot:
        os << "# mu1 nu1 mu2 nu2 w\n";
        break;
    case grid_format::json:
        os << "{\"dim\": 2, \"pair\": true, \"rows\": [";
        break;
    }
    for (int m1 = 0; m1 < 2; ++m1) {
        if (m1 && fmt == grid_format::gnuplot) os << '\n';
        for (int n1 = 0; n1 < 2; ++n1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (int n2 = 0; n2 < 2; ++n2) {
                    std::string v = format_double(w(m1, n1, m2, n2));
                    if (fmt == grid_format::csv)
                        os << m1 << ',' << n1 << ',' << m2 << ',' << n2 << ',' << v << '\n';
                    else if (fmt == grid_format::gnuplot)
                        os << m1 << ' ' << n1 << ' ' << m2 << ' ' << n2 << ' ' << v << '\n';
                    else
                        os << (first ? "" : ", ") << '[' << m1 << ", " << n1 << ", " << m2 << ", " << n2 << ", " << v
                           << ']';
                    first = false;
                }
    }
    if (fmt == grid_format::json) os << "]}\n";
    return os.str();
}

any_grid parse_grid(std::string_view text, grid_format fmt) {
    if (fmt != grid_format::json) return grid_from_rows(table_rows(text, fmt));
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw parse_error("missing field \"rows\"");
    std::vector<std::vector<double>> rows;
    const json& rs = doc["rows"];
    for (std::size_t r = 0; r < rs.size(); ++r) {
        std::string where = "rows[" + std::to_string(r) + "]";
        if (!rs[r].is_array()) throw parse_error(where + ": expected an array");
        std::vector<double> row;
        for (std::size_t c = 0; c < rs[r].size(); ++c)
            row.push_back(read_number(rs[r][c], where + "[" + std::to_string(c) + "]"));
        rows.push_back(std::move(row));
    }
    any_grid g = grid_from_rows(rows);
    if (doc.contains("dim") && std::holds_alternative<wigner_grid>(g) &&
        doc["dim"] != std::get<wigner_grid>(g).dim)
        throw parse_error("field \"dim\" disagrees with the number of rows");
    return g;
}

}  // namespace dwig
