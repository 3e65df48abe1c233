/*
 * Copyright 2026 bosonbunch developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bosonbunch/textio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bosonbunch {

std::string format_value(double v) {
    if (v == 0.0)
        return "0";
    char buf[48];
    if (std::abs(v) < 1e-4)
        std::snprintf(buf, sizeof(buf), "%.11e", v);
    else
        std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_complex(cxd v) {
    const double im = v.imag();
    std::string s = format_value(v.real());
    s += (std::signbit(im) ? '-' : '+');
    s += format_value(std::abs(im));
    s += 'j';
    return s;
}

cxd parse_complex(const std::string& token) {
    if (token.empty())
        throw ParseError("empty complex token");
    if (token.back() != 'j') {
        // plain real value
        try {
            std::size_t pos = 0;
            const double re = std::stod(token, &pos);
            if (pos != token.size())
                throw std::invalid_argument(token);
            return cxd(re, 0.0);
        } catch (const std::exception&) {
            throw ParseError("bad complex token '" + token + "'");
        }
    }
    const std::string body = token.substr(0, token.size() - 1);
    // split at the sign of the imaginary part: last +/- not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw ParseError("bad complex token '" + token + "'");
    try {
        std::size_t pos = 0;
        const double re = std::stod(body.substr(0, split), &pos);
        if (pos != split)
            throw std::invalid_argument(body);
        const std::string im_part = body.substr(split);
        pos = 0;
        const double im = std::stod(im_part, &pos);
        if (pos != im_part.size())
            throw std::invalid_argument(body);
        return cxd(re, im);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad complex token '" + token + "'");
    }
}

ComplexMatrix read_matrix(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows == 0 || cols == 0)
        throw ParseError("matrix file: expected 'rows cols' header");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::string token;
            if (!(in >> token))
                throw ParseError("matrix file: truncated at entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            m(i, j) = parse_complex(token);
        }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open matrix file '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << format_complex(m(i, j));
        out << '\n';
    }
}

GramMatrix read_gram(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n) || n == 0)
        throw ParseError("gram file: expected dimension header");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string token;
            if (!(in >> token))
                throw ParseError("gram file: truncated");
            m(i, j) = parse_complex(token);
        }
    return GramMatrix(std::move(m));
}

GramMatrix read_gram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open gram file '" + path + "'");
    return read_gram(in);
}

void write_gram(std::ostream& out, const GramMatrix& g) {
    out << g.dim() << '\n';
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j)
            out << (j ? " " : "") << format_complex(g.entry(i, j));
        out << '\n';
    }
}

void write_distribution_csv(std::ostream& out, const OutputDistribution& d) {
    for (int j = 0; j < d.modes(); ++j)
        out << (j ? "," : "") << 'n' << (j + 1);
    out << ",probability\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (int c : d.occupation(i))
            out << c << ',';
        out << format_value(d.probability(i)) << '\n';
    }
    out << "# p_B=" << format_value(d.p_bunching()) << ", p_FB=" << format_value(d.p_full_bunching())
        << ", clamped_mass=" << format_value(d.clamped_mass()) << '\n';
    if (d.unitary_warning() || d.renorm_factor() != 1.0)
        out << "# sum=" << format_value(d.sum()) << ", renorm_factor="
            << format_value(d.renorm_factor()) << ", unitary_warning="
            << (d.unitary_warning() ? 1 : 0) << '\n';
}

OutputDistribution read_distribution_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw ParseError("distribution csv: empty input");
    int modes = 0;
    {
        std::istringstream hs(header);
        std::string col;
        while (std::getline(hs, col, ',')) {
            if (col == "probability")
                break;
            if (col != "n" + std::to_string(modes + 1))
                throw ParseError("distribution csv: unexpected column '" + col + "'");
            ++modes;
        }
    }
    if (modes == 0)
        throw ParseError("distribution csv: no mode columns");

    std::vector<std::pair<std::vector<int>, double>> rows;
    int photons = -1;
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<int> occ(static_cast<std::size_t>(modes));
        std::string field;
        int total = 0;
        for (int j = 0; j < modes; ++j) {
            if (!std::getline(ls, field, ','))
                throw ParseError("distribution csv line " + std::to_string(line_no) + ": short row");
            occ[static_cast<std::size_t>(j)] = std::stoi(field);
            total += occ[static_cast<std::size_t>(j)];
        }
        if (!std::getline(ls, field))
            throw ParseError("distribution csv line " + std::to_string(line_no) + ": missing probability");
        const double p = std::stod(field);
        if (photons == -1)
            photons = total;
        else if (photons != total)
            throw ParseError("distribution csv line " + std::to_string(line_no) +
                             ": photon number differs between rows");
        rows.emplace_back(std::move(occ), p);
    }
    if (photons < 0)
        throw ParseError("distribution csv: no data rows");

    const auto occupations = enumerate_occupations(photons, modes);
    std::vector<double> probs(occupations.size(), 0.0);
    for (const auto& [occ, p] : rows) {
        bool placed = false;
        for (std::size_t i = 0; i < occupations.size(); ++i)
            if (occupations[i] == occ) {
                probs[i] = p;
                placed = true;
                break;
            }
        if (!placed)
            throw ParseError("distribution csv: invalid occupation row");
    }
    return OutputDistribution(modes, photons, std::move(probs));
}

OutputDistribution read_distribution_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open distribution csv '" + path + "'");
    return read_distribution_csv(in);
}

} // namespace bosonbunch
