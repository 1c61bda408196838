#pragma once

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "superconf/error.hpp"

// Max-norm distance between two vectors of the same size.
inline double vec_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    EXPECT_EQ(a.size(), b.size());
    return (a - b).cwiseAbs().maxCoeff();
}

#define EXPECT_ERROR_KIND(stmt, kind_)                                        \
    do {                                                                       \
        try {                                                                  \
            stmt;                                                              \
            ADD_FAILURE() << "expected superconf::Error";                     \
        } catch (const superconf::Error& e_) {                                 \
            EXPECT_EQ(e_.kind(), kind_) << e_.what();                          \
        }                                                                      \
    } while (0)
