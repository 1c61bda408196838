#include "superconf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "superconf/error.hpp"
#include "superconf/geometry.hpp"
#include "superconf/parallel.hpp"

namespace superconf::io {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SampleRow failed_row(double u, double v, unsigned flags) {
    SampleRow r;
    r.u = u;
    r.v = v;
    r.x.setConstant(kNaN);
    r.K = r.KN_abs = r.Hnorm = r.mu = kNaN;
    r.res_orth = r.res_len = r.wintgen = r.wintgen_relative = r.a = kNaN;
    r.flags = flags;
    return r;
}

}  // namespace

std::vector<SampleRow> construct_rows(const MinimalPair& pair, Sign sign, const Grid& grid) {
    std::vector<SampleRow> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const cplx z = grid.point(i);
        PhiSample ph;
        try {
            ph = build_phi(pair, sign, z);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::domain) throw;
            rows[i] = failed_row(z.real(), z.imag(), kFlagFailed);
            return;
        }
        SampleRow r = failed_row(z.real(), z.imag(), ph.flags.bits());
        r.x = value_of(ph.phi);
        r.a = ph.frame.a.v;
        try {
            const FundamentalData fd = fundamental_data(ph.phi);
            const SuperconformalityReport sc = superconformality_test(fd);
            const EllipseDescriptor el = ellipse_descriptor(fd);
            r.K = fd.K;
            r.KN_abs = std::abs(fd.KN);
            r.Hnorm = fd.lambda;
            r.mu = el.mu;
            r.res_orth = sc.res_orth;
            r.res_len = sc.res_len;
            r.wintgen = sc.wintgen_defect;
            r.wintgen_relative = sc.wintgen_relative;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::singular) throw;
            r.flags |= 4u;
        }
        rows[i] = r;
    });
    return rows;
}

RowSummary summarize(const std::vector<SampleRow>& rows) {
    RowSummary s;
    for (const SampleRow& r : rows) {
        ++s.points;
        if (r.flags != 0) {
            ++s.flagged;
            continue;
        }
        s.max_res_orth = std::max(s.max_res_orth, r.res_orth);
        s.max_res_len = std::max(s.max_res_len, r.res_len);
        s.max_wintgen_relative = std::max(s.max_wintgen_relative, r.wintgen_relative);
    }
    return s;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<SampleRow>& rows) {
    out << kCsvHeader << '\n';
    for (const SampleRow& r : rows) {
        const double cols[] = {r.u,  r.v,      r.x(0),  r.x(1),     r.x(2),    r.x(3),    r.K,
                               r.KN_abs, r.Hnorm, r.mu, r.res_orth, r.res_len, r.wintgen, r.a};
        for (double c : cols) out << format_double(c) << ',';
        out << r.flags << '\n';
    }
}

std::string csv_string(const std::vector<SampleRow>& rows) {
    std::ostringstream s;
    write_csv(s, rows);
    return s.str();
}

Mesh grid_mesh(const std::vector<SampleRow>& rows, const Grid& grid) {
    if (rows.size() != grid.size()) throw Error(ErrorKind::precondition, "grid_mesh: row count does not match grid");
    Mesh m;
    m.vertices.reserve(rows.size());
    for (const SampleRow& r : rows) m.vertices.push_back(r.x);
    auto id = [&](int i, int j) { return i * grid.nv + j; };
    auto ok = [&](int k) { return (rows[k].flags & kFlagFailed) == 0 && m.vertices[k].allFinite(); };
    for (int i = 0; i + 1 < grid.nu; ++i) {
        for (int j = 0; j + 1 < grid.nv; ++j) {
            const std::array<int, 4> q = {id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)};
            if (ok(q[0]) && ok(q[1]) && ok(q[2]) && ok(q[3])) m.quads.push_back(q);
        }
    }
    return m;
}

nlohmann::json mesh_to_json(const Mesh& mesh) {
    nlohmann::json j;
    j["format"] = "superconf-mesh4";
    nlohmann::json verts = nlohmann::json::array();
    for (const Eigen::Vector4d& x : mesh.vertices) {
        nlohmann::json v = nlohmann::json::array();
        for (int k = 0; k < 4; ++k) v.push_back(std::isfinite(x(k)) ? nlohmann::json(x(k)) : nlohmann::json());
        verts.push_back(v);
    }
    j["vertices"] = verts;
    j["quads"] = mesh.quads;
    return j;
}

Mesh mesh_from_json(const nlohmann::json& j) {
    Mesh m;
    try {
        for (const auto& v : j.at("vertices")) {
            Eigen::Vector4d x;
            for (int k = 0; k < 4; ++k) x(k) = v.at(k).is_null() ? kNaN : v.at(k).get<double>();
            m.vertices.push_back(x);
        }
        m.quads = j.at("quads").get<std::vector<std::array<int, 4>>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("mesh JSON: ") + e.what());
    }
    for (const auto& q : m.quads) {
        for (int k : q) {
            if (k < 0 || static_cast<std::size_t>(k) >= m.vertices.size()) {
                throw Error(ErrorKind::parse, "mesh JSON: quad index out of range");
            }
        }
    }
    return m;
}

Projection parse_projection(const std::string& text) {
    Projection p;
    if (text.rfind("drop:", 0) == 0) {
        const std::string k = text.substr(5);
        if (k.size() != 1 || k[0] < '0' || k[0] > '3') {
            throw Error(ErrorKind::parse, "projection: expected drop:k with k in 0..3");
        }
        p.kind = Projection::Kind::drop;
        p.drop = k[0] - '0';
        return p;
    }
    if (text == "stereo") {
        p.kind = Projection::Kind::stereo;
        return p;
    }
    if (text.rfind("stereo:", 0) == 0) {
        p.kind = Projection::Kind::stereo;
        std::stringstream s(text.substr(7));
        std::string item;
        int k = 0;
        while (std::getline(s, item, ',')) {
            if (k >= 4) throw Error(ErrorKind::parse, "projection: stereo pole needs 4 coordinates");
            try {
                std::size_t used = 0;
                p.pole(k++) = std::stod(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw Error(ErrorKind::parse, "projection: bad pole coordinate '" + item + "'");
            }
        }
        if (k != 4 || p.pole.norm() == 0.0) throw Error(ErrorKind::parse, "projection: stereo pole needs 4 coordinates");
        return p;
    }
    throw Error(ErrorKind::parse, "projection: expected drop:k or stereo[:p0,p1,p2,p3], found '" + text + "'");
}

Eigen::Vector3d project(const Eigen::Vector4d& x, const Projection& p) {
    if (p.kind == Projection::Kind::drop) {
        Eigen::Vector3d y;
        for (int k = 0, m = 0; k < 4; ++k) {
            if (k != p.drop) y(m++) = x(k);
        }
        return y;
    }
    // Line from the pole through x, cut with the hyperplane through 0 orthogonal to the pole.
    const double pp = p.pole.squaredNorm();
    const double den = pp - x.dot(p.pole);
    if (std::abs(den) <= 1e-14 * pp) throw Error(ErrorKind::singular, "projection: point at the pole");
    const Eigen::Vector4d y = p.pole + (pp / den) * (x - p.pole);
    Eigen::Matrix<double, 4, 3> basis;
    const Eigen::Vector4d n = p.pole / std::sqrt(pp);
    if (std::abs(std::abs(n(3)) - 1.0) < 1e-15) {
        basis.setZero();
        basis(0, 0) = basis(1, 1) = basis(2, 2) = 1.0;
    } else {
        const Eigen::Matrix4d Q = Eigen::HouseholderQR<Eigen::Vector4d>(n).householderQ();
        basis = Q.rightCols<3>();
    }
    return basis.transpose() * y;
}

void write_obj(std::ostream& out, const Mesh& mesh, Projection p) {
    if (p.kind == Projection::Kind::stereo && p.pole.norm() == 0.0) {
        double r = 0.0;
        for (const Eigen::Vector4d& x : mesh.vertices) {
            if (x.allFinite()) r = std::max(r, x.norm());
        }
        p.pole = Eigen::Vector4d(0, 0, 0, 2.0 * r + 1.0);
    }
    out << "# lossy 3D projection of a 4D mesh; the JSON mesh is the reference\n";
    if (p.kind == Projection::Kind::drop) {
        out << "# projection drop:" << p.drop << '\n';
    } else {
        out << "# projection stereo from pole " << format_double(p.pole(0)) << ',' << format_double(p.pole(1)) << ','
            << format_double(p.pole(2)) << ',' << format_double(p.pole(3)) << '\n';
    }
    for (const Eigen::Vector4d& x : mesh.vertices) {
        const Eigen::Vector3d y = x.allFinite() ? project(x, p) : Eigen::Vector3d::Zero();
        out << "v " << format_double(y(0)) << ' ' << format_double(y(1)) << ' ' << format_double(y(2)) << '\n';
    }
    for (const auto& q : mesh.quads) {
        out << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << '\n';
        out << "f " << q[0] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f) throw Error(ErrorKind::io, "write failed for '" + path + "'");
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::io, "cannot open '" + path + "' for reading");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace superconf::io
