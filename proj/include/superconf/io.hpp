#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "superconf/construct.hpp"
#include "superconf/minimal.hpp"

namespace superconf::io {

// Set in addition to the regularity bits when the construction itself failed at a sample.
inline constexpr unsigned kFlagFailed = 8;

struct SampleRow {
    double u = 0, v = 0;
    Eigen::Vector4d x = Eigen::Vector4d::Zero();
    double K = 0, KN_abs = 0, Hnorm = 0, mu = 0;
    double res_orth = 0, res_len = 0, wintgen = 0, wintgen_relative = 0;
    double a = 0;
    unsigned flags = 0;
};

// φ± over the grid, row-major (u outer). Geometry of failed samples is NaN.
std::vector<SampleRow> construct_rows(const MinimalPair& pair, Sign sign, const Grid& grid);

struct RowSummary {
    std::size_t points = 0;
    std::size_t flagged = 0;
    double max_res_orth = 0;
    double max_res_len = 0;
    double max_wintgen_relative = 0;
};

// Aggregates over unflagged rows only.
RowSummary summarize(const std::vector<SampleRow>& rows);

// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

inline constexpr const char* kCsvHeader = "u,v,x0,x1,x2,x3,K,KN_abs,Hnorm,mu,res_orth,res_len,wintgen,a,flags";
void write_csv(std::ostream& out, const std::vector<SampleRow>& rows);
std::string csv_string(const std::vector<SampleRow>& rows);

struct Mesh {
    std::vector<Eigen::Vector4d> vertices;
    std::vector<std::array<int, 4>> quads;
};

// Quads touching a failed sample are dropped; the vertex list keeps every grid point.
Mesh grid_mesh(const std::vector<SampleRow>& rows, const Grid& grid);

nlohmann::json mesh_to_json(const Mesh& mesh);
Mesh mesh_from_json(const nlohmann::json& j);

struct Projection {
    enum class Kind { drop, stereo } kind = Kind::drop;
    int drop = 3;
    Eigen::Vector4d pole = Eigen::Vector4d::Zero();  // zero: chosen from the mesh extent
};

// "drop:k" (k in 0..3), "stereo" or "stereo:p0,p1,p2,p3".
Projection parse_projection(const std::string& text);
Eigen::Vector3d project(const Eigen::Vector4d& x, const Projection& p);
void write_obj(std::ostream& out, const Mesh& mesh, Projection p);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace superconf::io
