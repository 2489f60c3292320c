#pragma once

// Reference n=2, k=4 rho matrix, entrywise, in derivative coordinates fc_j = f_c^(j).
// Columns: e1 e2 | e1^2 e1e2 e2^2 | e1^3 e1^2e2 e1e2^2 e2^3 | e1^4 ... e2^4

#include <array>

namespace golden {

inline constexpr std::array<std::array<const char*, 14>, 4> rho_2_4 = {{
    {"f1_1", "f2_1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1/2*f1_2", "1/2*f2_2", "f1_1^2", "f1_1*f2_1", "f2_1^2", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1/6*f1_3", "1/6*f2_3", "f1_1*f1_2", "f1_1*f2_2 + f1_2*f2_1", "f2_1*f2_2", "f1_1^3", "f1_1^2*f2_1",
     "f1_1*f2_1^2", "f2_1^3", "0", "0", "0", "0", "0"},
    {"1/24*f1_4", "1/24*f2_4", "2/6*f1_1*f1_3 + 1/4*f1_2^2", "2/6*(f1_1*f2_3 + f1_3*f2_1) + 1/2*f1_2*f2_2",
     "2/6*f2_1*f2_3 + 1/4*f2_2^2", "3/2*f1_1^2*f1_2", "3/2*(f1_1^2*f2_2 + 2*f1_1*f2_1*f1_2)",
     "3/2*(f2_1^2*f1_2 + 2*f2_1*f1_1*f2_2)", "3/2*f2_1^2*f2_2", "f1_1^4", "f1_1^3*f2_1", "f1_1^2*f2_1^2",
     "f1_1*f2_1^3", "f2_1^4"},
}};

inline constexpr int stated_columns = 15;

}  // namespace golden
