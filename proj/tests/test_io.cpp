#include <cmath>
#include <limits>
#include <sstream>

#include "superconf/catalog.hpp"
#include "superconf/io.hpp"
#include "superconf/parallel.hpp"
#include "test_util.hpp"

using namespace superconf;

namespace {

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
    std::istringstream s(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(s, line)) n += line.rfind(prefix, 0) == 0;
    return n;
}

}  // namespace

TEST(Io, CsvHasHeaderAndOneRowPerSample) {
    const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    const Grid g{e.grid, 3, 3};
    const std::string csv = io::csv_string(io::construct_rows(*e.pair, Sign::plus, g));
    EXPECT_EQ(csv.rfind(io::kCsvHeader, 0), 0u);
    EXPECT_EQ(count_prefix(csv, ""), 10u);
}

TEST(Io, FormatDoubleRoundTrips) {
    for (double x : {0.1, -1e-300, 3.141592653589793, 1.0 / 3.0, 6.02214076e23}) {
        EXPECT_EQ(std::stod(io::format_double(x)), x);
    }
    EXPECT_EQ(io::format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(Io, ObjOfTwoByTwoGrid) {
    const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    const Grid g{e.grid, 2, 2};
    const io::Mesh m = io::grid_mesh(io::construct_rows(*e.pair, Sign::plus, g), g);
    std::ostringstream out;
    io::write_obj(out, m, io::parse_projection("stereo"));
    EXPECT_EQ(count_prefix(out.str(), "v "), 4u);
    EXPECT_EQ(count_prefix(out.str(), "f "), 2u);
    EXPECT_EQ(count_prefix(out.str(), "# "), 2u);
}

TEST(Io, MeshJsonRoundTripsExactly) {
    const catalog::CatalogEntry e = catalog::get("whitney");
    const Grid g{e.grid, 5, 4};
    const io::Mesh m = io::grid_mesh(io::construct_rows(*e.pair, Sign::plus, g), g);
    const io::Mesh back = io::mesh_from_json(nlohmann::json::parse(io::mesh_to_json(m).dump()));
    ASSERT_EQ(back.vertices.size(), m.vertices.size());
    for (std::size_t k = 0; k < m.vertices.size(); ++k) {
        for (int c = 0; c < 4; ++c) EXPECT_EQ(back.vertices[k](c), m.vertices[k](c));
    }
    EXPECT_EQ(back.quads, m.quads);
}

TEST(Io, MalformedMeshIsAParseError) {
    EXPECT_ERROR_KIND(io::mesh_from_json(nlohmann::json::parse(R"({"vertices": [[0,0,0,0]], "quads": [[0,0,0,1]]})")),
                      ErrorKind::parse);
    EXPECT_ERROR_KIND(io::mesh_from_json(nlohmann::json::parse(R"({"quads": []})")), ErrorKind::parse);
}

TEST(Io, OutputDoesNotDependOnThreadCount) {
    const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    const Grid g{e.grid, 17, 13};
    std::string ref;
    for (unsigned t : {1u, 3u, 8u}) {
        set_thread_count(t);
        const std::string csv = io::csv_string(io::construct_rows(*e.pair, Sign::minus, g));
        if (ref.empty()) ref = csv;
        EXPECT_EQ(csv, ref) << t << " threads";
    }
    set_thread_count(0);
}

TEST(Io, ProjectionParsing) {
    EXPECT_EQ(io::parse_projection("drop:1").drop, 1);
    const io::Projection p = io::parse_projection("stereo:0,0,1,0");
    EXPECT_EQ(p.kind, io::Projection::Kind::stereo);
    EXPECT_EQ(p.pole(2), 1.0);
    for (const char* bad : {"drop:4", "drop:", "stereo:1,2", "stereo:0,0,0,0", "stereo:a,0,0,1", "ortho"}) {
        EXPECT_ERROR_KIND(io::parse_projection(bad), ErrorKind::parse);
    }
}

TEST(Io, StereoProjectionOfThePoleIsSingular) {
    const io::Projection p = io::parse_projection("stereo:0,0,0,2");
    EXPECT_ERROR_KIND(io::project(Eigen::Vector4d(0, 0, 0, 2), p), ErrorKind::singular);
    // Points on the hyperplane stay fixed.
    EXPECT_LT(vec_dist(io::project(Eigen::Vector4d(1, 2, 3, 0), p), Eigen::Vector3d(1, 2, 3)), 1e-15);
}

TEST(Io, BadPathIsAnIoError) {
    EXPECT_ERROR_KIND(io::write_text("/nonexistent-dir/x.csv", "x"), ErrorKind::io);
    EXPECT_ERROR_KIND(io::read_text("/nonexistent-dir/x.csv"), ErrorKind::io);
}
