#include "eigenfloor/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eigenfloor/errors.hpp"
#include "eigenfloor/format.hpp"

namespace eigenfloor {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

std::vector<double> parse_row(const std::string& line, std::size_t expected, const char* what) {
    std::istringstream ss(line);
    std::vector<double> v;
    std::string tok;
    while (ss >> tok) v.push_back(parse_real(tok));
    if (v.size() != expected) {
        throw ParseError(std::string(what) + ": expected " + std::to_string(expected) + " entries, got " +
                         std::to_string(v.size()));
    }
    return v;
}

void write_row(std::ostream& out, std::span<const double> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << format_real(v[i]);
    }
    out << '\n';
}

}  // namespace

MatrixInput parse_matrix(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty matrix file");
    std::istringstream tag_ss(line);
    std::string tag;
    tag_ss >> tag;
    if (tag != "tri" && tag != "bidiag") throw ParseError("unknown matrix kind '" + tag + "'");

    if (!next_content_line(in, line)) throw ParseError("missing dimension line");
    std::istringstream m_ss(line);
    long long m = 0;
    std::string rest;
    if (!(m_ss >> m) || (m_ss >> rest)) throw ParseError("bad dimension line '" + line + "'");
    if (m < 2) throw ParseError("dimension must be at least 2");

    if (!next_content_line(in, line)) throw ParseError("missing diagonal line");
    auto diag = parse_row(line, static_cast<std::size_t>(m), "diagonal");
    if (!next_content_line(in, line)) throw ParseError("missing off-diagonal line");
    auto off = parse_row(line, static_cast<std::size_t>(m - 1), "off-diagonal");
    if (next_content_line(in, line)) throw ParseError("trailing content after matrix");

    try {
        if (tag == "tri") return SymTridiagonal(std::move(diag), std::move(off));
        return LowerBidiagonal(std::move(diag), std::move(off));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

MatrixInput read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_matrix(in);
}

void write_matrix(std::ostream& out, const SymTridiagonal& t) {
    out << "tri\n" << t.size() << '\n';
    write_row(out, t.diag());
    write_row(out, t.offdiag());
}

void write_matrix(std::ostream& out, const LowerBidiagonal& b) {
    out << "bidiag\n" << b.size() << '\n';
    write_row(out, b.diag());
    write_row(out, b.sub());
}

LowerBidiagonal random_bidiagonal(std::size_t m, std::uint64_t seed, double lo, double hi) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    std::vector<double> d(m);
    std::vector<double> s(m > 0 ? m - 1 : 0);
    for (double& x : d) x = std::exp(u(rng));
    for (double& x : s) x = std::exp(u(rng));
    return LowerBidiagonal(std::move(d), std::move(s));
}

}  // namespace eigenfloor
