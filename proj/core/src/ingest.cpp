#include "signet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace signet {

std::string to_string(EdgeLayer layer) {
    switch (layer) {
        case EdgeLayer::Alliance: return "alliance";
        case EdgeLayer::MidSameSide: return "mid_same_side";
        case EdgeLayer::MidOpposed: return "mid_opposed";
        case EdgeLayer::Rivalry: return "rivalry";
        case EdgeLayer::Raw: return "raw";
    }
    return "raw";
}

EdgeLayer edge_layer_from_string(const std::string& s) {
    if (s == "alliance") return EdgeLayer::Alliance;
    if (s == "mid_same_side") return EdgeLayer::MidSameSide;
    if (s == "mid_opposed") return EdgeLayer::MidOpposed;
    if (s == "rivalry") return EdgeLayer::Rivalry;
    return EdgeLayer::Raw;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_double(const std::string& s, long line_no) {
    const std::string t = trim(s);
    if (t.empty()) throw ParseError("empty numeric field", line_no);
    const char* begin = t.data();
    const char* end = begin + t.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("malformed number '" + t + "'", line_no);
    return value;
}

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::vector<EdgeRecord> load_edge_list(std::istream& in) {
    std::vector<EdgeRecord> records;
    std::set<std::pair<std::string, std::string>> seen[5];
    std::string line;
    long line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        auto cells = split_csv(stripped);
        if (!header_seen && cells.size() >= 2 && cells[0] == "node_a" && cells[1] == "node_b") {
            header_seen = true;
            continue;
        }
        if (cells.size() != 4)
            throw ParseError("expected 4 fields (node_a,node_b,weight,layer), got " +
                                 std::to_string(cells.size()),
                             line_no);
        EdgeRecord rec;
        rec.node_a = cells[0];
        rec.node_b = cells[1];
        if (rec.node_a.empty() || rec.node_b.empty())
            throw ParseError("empty node label", line_no);
        if (rec.node_a == rec.node_b)
            throw ParseError("self-edge '" + rec.node_a + "' not allowed", line_no);
        rec.weight = parse_double(cells[2], line_no);
        if (!std::isfinite(rec.weight)) throw ParseError("non-finite weight", line_no);
        rec.layer = edge_layer_from_string(cells[3]);

        auto key = std::minmax(rec.node_a, rec.node_b);
        auto& layer_seen = seen[static_cast<int>(rec.layer)];
        if (!layer_seen.insert({key.first, key.second}).second)
            throw DuplicateEdgeError("duplicate edge " + rec.node_a + "-" + rec.node_b +
                                     " in layer " + to_string(rec.layer) + " at line " +
                                     std::to_string(line_no));
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<EdgeRecord> load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list '" + path + "'");
    return load_edge_list(in);
}

SignedNetwork build_bias_matrix(const std::vector<EdgeRecord>& records, double lo, double hi,
                                std::vector<std::string> node_order) {
    if (records.empty()) throw EmptyInputError("build_bias_matrix: no records");
    if (!(lo < hi)) throw DomainError("build_bias_matrix: needs lo < hi");

    std::vector<std::string> order = std::move(node_order);
    std::map<std::string, int> index;
    if (order.empty()) {
        for (const auto& rec : records) {
            if (index.emplace(rec.node_a, static_cast<int>(order.size())).second)
                order.push_back(rec.node_a);
            if (index.emplace(rec.node_b, static_cast<int>(order.size())).second)
                order.push_back(rec.node_b);
        }
    } else {
        for (std::size_t i = 0; i < order.size(); ++i)
            if (!index.emplace(order[i], static_cast<int>(i)).second)
                throw DomainError("build_bias_matrix: duplicate label in node_order");
        for (const auto& rec : records)
            if (!index.count(rec.node_a) || !index.count(rec.node_b))
                throw DomainError("build_bias_matrix: node_order misses '" +
                                  (index.count(rec.node_a) ? rec.node_b : rec.node_a) + "'");
    }
    const int n = static_cast<int>(order.size());
    if (n < 2) throw DomainError("build_bias_matrix: needs at least 2 nodes");

    Matrix sums = Matrix::Zero(n, n);
    for (const auto& rec : records) {
        double contribution = 0.0;
        switch (rec.layer) {
            case EdgeLayer::Alliance:
            case EdgeLayer::MidSameSide: contribution = std::abs(rec.weight); break;
            case EdgeLayer::Rivalry:
            case EdgeLayer::MidOpposed: contribution = -std::abs(rec.weight); break;
            case EdgeLayer::Raw: contribution = rec.weight; break;
        }
        const int i = index[rec.node_a];
        const int j = index[rec.node_b];
        sums(i, j) += contribution;
        sums(j, i) += contribution;
    }

    double max_pos = 0.0, max_neg = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            max_pos = std::max(max_pos, sums(i, j));
            max_neg = std::min(max_neg, sums(i, j));
        }
    // Zero-preserving rescale: aim for max(|lo|,|hi|)/max|sum|, capped so an
    // asymmetric target range still contains every entry.
    double scale = 1.0;
    const double max_abs = std::max(max_pos, -max_neg);
    if (max_abs > 0.0) {
        scale = std::max(std::abs(lo), std::abs(hi)) / max_abs;
        if (max_pos > 0.0) scale = std::min(scale, hi / max_pos);
        if (max_neg < 0.0) scale = std::min(scale, lo / max_neg);
    }
    sums *= scale;
    return SignedNetwork::fromSymmetrized(std::move(sums), std::move(order));
}

void write_matrix_csv(std::ostream& out, const SignedNetwork& net) {
    const int n = net.size();
    for (int j = 0; j < n; ++j) out << ',' << net.labelOf(j);
    out << '\n';
    for (int i = 0; i < n; ++i) {
        out << net.labelOf(i);
        for (int j = 0; j < n; ++j) out << ',' << format17(net(i, j));
        out << '\n';
    }
}

void write_matrix_csv_file(const std::string& path, const SignedNetwork& net) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write matrix '" + path + "'");
    write_matrix_csv(out, net);
}

SignedNetwork read_matrix_csv(std::istream& in) {
    std::string line;
    long line_no = 0;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        auto cells = split_csv(line);
        if (cells.size() < 3 || !cells[0].empty())
            throw ParseError("matrix header must start with an empty cell", line_no);
        labels.assign(cells.begin() + 1, cells.end());
        break;
    }
    if (labels.empty()) throw ParseError("matrix file has no header", line_no);
    const int n = static_cast<int>(labels.size());
    Matrix m(n, n);
    int row = 0;
    while (row < n && std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        auto cells = split_csv(line);
        if (static_cast<int>(cells.size()) != n + 1)
            throw ParseError("matrix row has wrong cell count", line_no);
        if (cells[0] != labels[static_cast<std::size_t>(row)])
            throw ParseError("matrix row label mismatch '" + cells[0] + "'", line_no);
        for (int j = 0; j < n; ++j)
            m(row, j) = parse_double(cells[static_cast<std::size_t>(j + 1)], line_no);
        ++row;
    }
    if (row != n) throw ParseError("matrix file ended early", line_no);
    return SignedNetwork::fromMatrix(std::move(m), std::move(labels));
}

SignedNetwork read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix '" + path + "'");
    return read_matrix_csv(in);
}

} // namespace signet
