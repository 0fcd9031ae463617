#include "canform/text_format.hpp"

#include <fstream>
#include <sstream>

namespace canform {

namespace {

std::uint64_t parse_count(const std::string& token, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::ParseError, std::string("expected ") + what + ", got '" + token + "'");
    try {
        return std::stoull(token);
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::ParseError, std::string(what) + " out of range: " + token);
    }
}

// Skips whitespace and '#' comments; returns false at end of input.
bool next_token(std::istream& in, std::string& token) {
    while (in >> token) {
        if (token[0] != '#') return true;
        std::string rest;
        std::getline(in, rest);
    }
    return false;
}

} // namespace

Field parse_field_spec(const std::vector<std::string>& tokens) {
    if (tokens.size() == 1 && tokens[0] == "Q") return Field::rationals();
    if (tokens.size() == 2 && tokens[0] == "GF") return Field::prime(parse_count(tokens[1], "prime modulus"));
    if (tokens.size() == 1 && tokens[0].rfind("GF", 0) == 0) {
        // Accept "GF7" and "GF(7)" as shorthands.
        std::string digits = tokens[0].substr(2);
        if (!digits.empty() && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
        return Field::prime(parse_count(digits, "prime modulus"));
    }
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
    throw Error(ErrorKind::ParseError, "unknown field '" + joined + "'");
}

Matrix read_matrix(std::istream& in, const std::optional<Field>& override_field) {
    std::string token;
    if (!next_token(in, token)) throw Error(ErrorKind::ParseError, "unexpected end of input, expected a matrix");

    std::optional<Field> field;
    if (token == "field") {
        std::string kind;
        if (!next_token(in, kind)) throw Error(ErrorKind::ParseError, "missing field kind");
        std::vector<std::string> spec{kind};
        if (kind == "GF") {
            std::string p;
            if (!next_token(in, p)) throw Error(ErrorKind::ParseError, "missing prime modulus");
            spec.push_back(p);
        }
        field = parse_field_spec(spec);
        if (override_field) require_same_field(*override_field, *field);
        if (!next_token(in, token)) throw Error(ErrorKind::ParseError, "missing dimensions");
    } else if (override_field) {
        field = override_field;
    } else {
        throw Error(ErrorKind::ParseError, "missing 'field' header and no field given");
    }

    std::size_t rows = parse_count(token, "row count");
    if (!next_token(in, token)) throw Error(ErrorKind::ParseError, "missing column count");
    std::size_t cols = parse_count(token, "column count");

    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        if (!next_token(in, token))
            throw Error(ErrorKind::ParseError, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                   std::to_string(i));
        entries.push_back(Scalar::parse(*field, token));
    }
    return Matrix(*field, rows, cols, std::move(entries));
}

std::vector<Matrix> read_matrices(std::istream& in, const std::optional<Field>& override_field) {
    std::vector<Matrix> out;
    while (true) {
        in >> std::ws;
        while (in.peek() == '#') {
            std::string line;
            std::getline(in, line);
            in >> std::ws;
        }
        if (in.peek() == std::char_traits<char>::eof()) break;
        out.push_back(read_matrix(in, override_field));
    }
    return out;
}

Matrix read_matrix_file(const std::string& path, const std::optional<Field>& override_field) {
    auto all = read_matrix_file_all(path, override_field);
    if (all.size() != 1)
        throw Error(ErrorKind::ParseError, path + ": expected one matrix, found " + std::to_string(all.size()));
    return all.front();
}

std::vector<Matrix> read_matrix_file_all(const std::string& path, const std::optional<Field>& override_field) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    try {
        return read_matrices(in, override_field);
    } catch (const Error& e) {
        std::string message = e.what();
        message.erase(0, error_name(e.kind()).size() + 2);
        throw Error(e.kind(), path + ": " + message);
    }
}

std::string field_header(const Field& field) {
    return field.is_rationals() ? "field Q" : "field GF " + std::to_string(field.characteristic());
}

std::string write_matrix(const Matrix& m) {
    std::ostringstream out;
    out << field_header(m.field()) << '\n' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).to_string();
        out << '\n';
    }
    return out.str();
}

} // namespace canform
