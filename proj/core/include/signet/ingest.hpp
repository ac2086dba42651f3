#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "signet/network.hpp"

namespace signet {

/// Relationship layer of an edge record. The layer fixes the contribution
/// sign: alliances and same-side dispute participation count positive,
/// opposed-side disputes and rivalries negative, raw passes through as-is.
enum class EdgeLayer { Alliance, MidSameSide, MidOpposed, Rivalry, Raw };

std::string to_string(EdgeLayer layer);
EdgeLayer edge_layer_from_string(const std::string& s); ///< unknown names map to Raw

struct EdgeRecord {
    std::string node_a;
    std::string node_b;
    double weight = 0.0;
    EdgeLayer layer = EdgeLayer::Raw;
};

/// Parses the CSV edge-list format: header `node_a,node_b,weight,layer`,
/// `#` comment lines, UTF-8. Unknown layers become Raw. Throws ParseError
/// with the offending line number, DuplicateEdgeError when one dyad repeats
/// within a layer.
std::vector<EdgeRecord> load_edge_list(std::istream& in);
std::vector<EdgeRecord> load_edge_list_file(const std::string& path);

/// Builds the dyadic bias matrix: layer signs applied to |weight| (Raw keeps
/// its sign), contributions summed per dyad, then rescaled by
/// max(|lo|,|hi|)/max|sum| so zero stays zero. When the target range is
/// asymmetric the scale is capped so every entry stays inside [lo, hi].
/// Node order is first appearance unless node_order is given (which must
/// cover every node in the records). Throws EmptyInputError on no records.
SignedNetwork build_bias_matrix(const std::vector<EdgeRecord>& records, double lo, double hi,
                                std::vector<std::string> node_order = {});

/// Matrix CSV: empty first cell, node labels as first row and column, full
/// symmetric matrix at 17 significant digits. Round-trips bit-exact.
void write_matrix_csv(std::ostream& out, const SignedNetwork& net);
void write_matrix_csv_file(const std::string& path, const SignedNetwork& net);
SignedNetwork read_matrix_csv(std::istream& in);
SignedNetwork read_matrix_csv_file(const std::string& path);

} // namespace signet
