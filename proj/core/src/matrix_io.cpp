#include "axbsolve/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace axb {

namespace {

mpz_class parse_int(const std::string& text) {
    std::string digits = text;
    if (!digits.empty() && digits.front() == '+')
        digits.erase(digits.begin());
    // mpz_class(string) throws std::invalid_argument on anything that is
    // not a plain base-10 integer.
    return mpz_class(digits);
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Rat parse_rat(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) {
        Rat x(parse_int(token));
        return x;
    }
    if (token.find('/', slash + 1) != std::string::npos)
        throw std::invalid_argument("more than one '/' in rational");
    mpz_class num = parse_int(token.substr(0, slash));
    mpz_class den = parse_int(token.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

std::string format_rat(const Rat& x) { return x.get_str(); }

Mat parse_matrix(std::istream& in, const std::string& source_name) {
    std::vector<std::vector<Rat>> rows;
    std::string line;
    std::size_t line_no = 0;
    std::size_t first_row_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        std::vector<Rat> row;
        while (tokens >> tok) {
            if (tok.front() == '#')
                break;
            try {
                row.push_back(parse_rat(tok));
            } catch (const std::invalid_argument& e) {
                fail(source_name, line_no, "bad entry '" + tok + "': " + e.what());
            }
        }
        if (row.empty())
            continue;  // blank or comment line
        if (!rows.empty() && row.size() != rows.front().size())
            fail(source_name, line_no,
                 "row has " + std::to_string(row.size()) + " entries, expected " +
                     std::to_string(rows.front().size()));
        if (rows.empty())
            first_row_line = line_no;
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        fail(source_name, line_no ? line_no : 1, "matrix has no rows");
    (void)first_row_line;
    Mat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

Mat parse_matrix_string(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    return parse_matrix(in, source_name);
}

Mat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    return parse_matrix(in, path);
}

std::string format_matrix(const Mat& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ' ';
            out += format_rat(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << format_matrix(m); }

}  // namespace axb
