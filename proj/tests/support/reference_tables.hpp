#pragma once

#include <cstdint>
#include <vector>

// Character tables of S_1..S_7 computed independently with the Jacobi-Trudi determinant
// (tests/oracles/derive.py). Rows and columns follow the same partition order.
namespace symgen::testing::reference {

struct Table {
    int n;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<std::int64_t>> values;
};

inline const std::vector<Table> character_tables{
    {1,
     {{1}},
     {
         {1},
     }},
    {2,
     {{2}, {1, 1}},
     {
         {1, 1},
         {-1, 1},
     }},
    {3,
     {{3}, {2, 1}, {1, 1, 1}},
     {
         {1, 1, 1},
         {-1, 0, 2},
         {1, -1, 1},
     }},
    {4,
     {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}},
     {
         {1, 1, 1, 1, 1},
         {-1, 0, -1, 1, 3},
         {0, -1, 2, 0, 2},
         {1, 0, -1, -1, 3},
         {-1, 1, 1, -1, 1},
     }},
    {5,
     {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}},
     {
         {1, 1, 1, 1, 1, 1, 1},
         {-1, 0, -1, 1, 0, 2, 4},
         {0, -1, 1, -1, 1, 1, 5},
         {1, 0, 0, 0, -2, 0, 6},
         {0, 1, -1, -1, 1, -1, 5},
         {-1, 0, 1, 1, 0, -2, 4},
         {1, -1, -1, 1, 1, -1, 1},
     }},
    {6,
     {{6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 3}, {3, 2, 1}, {3, 1, 1, 1}, {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}},
     {
         {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {-1, 0, -1, 1, -1, 0, 2, -1, 1, 3, 5},
         {0, -1, 1, -1, 0, 0, 0, 3, 1, 3, 9},
         {1, 0, 0, 0, 1, -1, 1, -2, -2, 2, 10},
         {0, 0, -1, -1, 2, 1, -1, -3, 1, 1, 5},
         {0, 1, 0, 0, -2, 0, -2, 0, 0, 0, 16},
         {-1, 0, 0, 0, 1, 1, 1, 2, -2, -2, 10},
         {0, 0, -1, 1, 2, -1, -1, 3, 1, -1, 5},
         {0, -1, 1, 1, 0, 0, 0, -3, 1, -3, 9},
         {1, 0, -1, -1, -1, 0, 2, 1, 1, -3, 5},
         {-1, 1, 1, -1, 1, -1, 1, -1, 1, -1, 1},
     }},
    {7,
     {{7}, {6, 1}, {5, 2}, {5, 1, 1}, {4, 3}, {4, 2, 1}, {4, 1, 1, 1}, {3, 3, 1}, {3, 2, 2}, {3, 2, 1, 1}, {3, 1, 1, 1, 1}, {2, 2, 2, 1}, {2, 2, 1, 1, 1}, {2, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1}},
     {
         {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {-1, 0, -1, 1, -1, 0, 2, 0, -1, 1, 3, 0, 2, 4, 6},
         {0, -1, 1, -1, 0, 0, 0, -1, 2, 0, 2, 2, 2, 6, 14},
         {1, 0, 0, 0, 1, -1, 1, 0, -1, -1, 3, -3, -1, 5, 15},
         {0, 0, -1, -1, 1, 0, -2, 2, -1, 1, -1, 0, 2, 4, 14},
         {0, 1, 0, 0, -1, 1, -1, -1, -1, -1, -1, 1, -1, 5, 35},
         {-1, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, -4, 0, 20},
         {0, 0, 1, 1, -1, -1, -1, 0, 1, 1, -3, -3, 1, 1, 21},
         {0, 0, -1, 1, 1, -1, 1, 0, 1, -1, -3, 3, 1, -1, 21},
         {0, -1, 0, 0, 1, 1, 1, -1, -1, 1, -1, -1, -1, -5, 35},
         {1, 0, 0, 0, -1, -1, -1, 0, -1, 1, 3, 3, -1, -5, 15},
         {0, 0, 1, -1, -1, 0, 2, 2, -1, -1, -1, 0, 2, -4, 14},
         {0, 1, -1, -1, 0, 0, 0, -1, 2, 0, 2, -2, 2, -6, 14},
         {-1, 0, 1, 1, 1, 0, -2, 0, -1, -1, 3, 0, 2, -4, 6},
         {1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1, 1, -1, 1},
     }},
};

} // namespace symgen::testing::reference
