#include "hwmc/io.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

namespace hwmc {

std::string format_double(double v) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, buf + len);
}

nlohmann::json complex_to_json(cxd v) { return nlohmann::json::array({v.real(), v.imag()}); }

nlohmann::json matrix_to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

cxd complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return cxd(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex entries must be [re, im] pairs");
    return cxd(j[0].get<double>(), j[1].get<double>());
}

Mat matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nested array");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("matrix JSON rows have unequal lengths");
        for (int k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

nlohmann::json section_to_json(const DualSection& s) {
    nlohmann::json out;
    out["n"] = s.n;
    out["fibers"] = nlohmann::json::array();
    const auto labels = all_irrep_labels(s.n);
    for (size_t i = 0; i < labels.size(); ++i) {
        nlohmann::json fj;
        if (labels[i].is_one_dim()) {
            fj["type"] = "one_dim";
            fj["u"] = labels[i].as_one_dim().u;
            fj["v"] = labels[i].as_one_dim().v;
        } else {
            fj["type"] = "n_dim";
            fj["alpha"] = labels[i].as_n_dim().alpha;
        }
        fj["matrix"] = matrix_to_json(s.fibers[i]);
        out["fibers"].push_back(fj);
    }
    return out;
}

void write_symbol_csv(std::ostream& os, const SymbolGrid& a) {
    os << "u,v,w,re,im\n";
    const int n = a.n;
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) {
                const cxd z = a.at(u, v, w);
                os << u << ',' << v << ',' << w << ',' << format_double(z.real()) << ','
                   << format_double(z.imag()) << '\n';
            }
}

void write_kernel_slice_csv(std::ostream& os, const Mat& slice) {
    for (int i = 0; i < slice.rows(); ++i) {
        for (int j = 0; j < slice.cols(); ++j) {
            if (j) os << ',';
            os << format_double(slice(i, j).real()) << ',' << format_double(slice(i, j).imag());
        }
        os << '\n';
    }
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,x1_re,x1_im,x2_re,x2_im\n";
    for (size_t i = 0; i < traj.t.size(); ++i) {
        os << format_double(traj.t[i]) << ',' << format_double(traj.x1[i].real()) << ','
           << format_double(traj.x1[i].imag()) << ',' << format_double(traj.x2[i].real()) << ','
           << format_double(traj.x2[i].imag()) << '\n';
    }
}

void write_wigner_csv(std::ostream& os, const WignerGrid& grid) {
    os << "t,omega";
    for (int a = 0; a < grid.channels; ++a)
        for (int b = 0; b < grid.channels; ++b)
            os << ",w" << (a + 1) << (b + 1) << "_re,w" << (a + 1) << (b + 1) << "_im";
    os << '\n';
    for (int i = 0; i < grid.n_time; ++i)
        for (int k = 0; k < grid.n_freq; ++k) {
            os << format_double(grid.time(i)) << ',' << format_double(grid.omega(k));
            for (int a = 0; a < grid.channels; ++a)
                for (int b = 0; b < grid.channels; ++b) {
                    const cxd v = grid.at(a, b, i, k);
                    os << ',' << format_double(v.real()) << ',' << format_double(v.imag());
                }
            os << '\n';
        }
}

}  // namespace hwmc
