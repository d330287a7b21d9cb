#include "dispkit/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace dispkit {

MatrixParseError::MatrixParseError(const std::string& source, std::size_t line, std::size_t column,
                                   const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::size_t parse_dimension(const Token& t, const std::string& source, std::size_t line)
{
    std::size_t value = 0;
    for (char c : t.text) {
        if (c < '0' || c > '9')
            throw MatrixParseError(source, line, t.column, "invalid dimension '" + std::string(t.text) + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
        if (value > 100000)
            throw MatrixParseError(source, line, t.column, "dimension too large");
    }
    if (value == 0)
        throw MatrixParseError(source, line, t.column, "dimensions must be positive");
    return value;
}

template <typename T>
std::string format_impl(const Matrix<T>& a, std::string_view comment)
{
    std::ostringstream os;
    if (!comment.empty())
        os << "# " << comment << '\n';
    os << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j)
                os << ' ';
            os << to_string(a(i, j));
        }
        os << '\n';
    }
    return os.str();
}

} // namespace

RationalMatrix read_matrix(std::istream& in, const std::string& source)
{
    std::string line;
    std::size_t lineno = 0;
    std::size_t rows = 0, cols = 0;
    bool have_header = false;
    std::vector<Rational> entries;
    std::size_t rows_read = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().text.front() == '#')
            continue;
        if (!have_header) {
            if (tokens.size() != 2)
                throw MatrixParseError(source, lineno, tokens.front().column,
                                       "expected header 'rows cols'");
            rows = parse_dimension(tokens[0], source, lineno);
            cols = parse_dimension(tokens[1], source, lineno);
            entries.reserve(rows * cols);
            have_header = true;
            continue;
        }
        if (rows_read == rows)
            throw MatrixParseError(source, lineno, tokens.front().column,
                                   "more than " + std::to_string(rows) + " rows");
        if (tokens.size() != cols) {
            const std::size_t col = tokens.size() > cols ? tokens[cols].column : line.size() + 1;
            throw MatrixParseError(source, lineno, col,
                                   "expected " + std::to_string(cols) + " entries, found " +
                                       std::to_string(tokens.size()));
        }
        for (const auto& t : tokens) {
            try {
                entries.push_back(parse_rational(t.text));
            } catch (const std::invalid_argument& e) {
                throw MatrixParseError(source, lineno, t.column, e.what());
            }
        }
        ++rows_read;
    }
    if (!have_header)
        throw MatrixParseError(source, lineno + 1, 1, "missing header 'rows cols'");
    if (rows_read != rows)
        throw MatrixParseError(source, lineno + 1, 1,
                               "expected " + std::to_string(rows) + " rows, found " +
                                   std::to_string(rows_read));
    return RationalMatrix(rows, cols, std::move(entries));
}

RationalMatrix read_matrix_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open matrix file '" + path.string() + "'");
    return read_matrix(in, path.string());
}

RationalMatrix parse_matrix(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_matrix(in, "<string>");
}

std::string format_matrix(const RationalMatrix& a, std::string_view comment)
{
    return format_impl(a, comment);
}

std::string format_matrix(const RealMatrix& a, std::string_view comment)
{
    return format_impl(a, comment);
}

template <typename T>
void write_matrix_file(const std::filesystem::path& path, const Matrix<T>& a, std::string_view comment)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write matrix file '" + path.string() + "'");
    out << format_matrix(a, comment);
}

template void write_matrix_file(const std::filesystem::path&, const RationalMatrix&, std::string_view);
template void write_matrix_file(const std::filesystem::path&, const RealMatrix&, std::string_view);

} // namespace dispkit
