#pragma once

#include <cstdio>
#include <string>

#include <Eigen/Dense>

namespace finsler::detail {

/// Shortest text that round-trips a double through strtod: 17 significant
/// digits, the precision the file formats promise.
inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string format_vector(const Eigen::VectorXd& v) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_real(v(i));
    }
    out += "]";
    return out;
}

inline std::string format_matrix(const Eigen::MatrixXd& m) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += format_real(m(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

}  // namespace finsler::detail
