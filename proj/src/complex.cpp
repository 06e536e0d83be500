#include "gridknot/complex.hpp"

namespace gridknot {

int GridComplex::marks_in(const std::vector<int>& mark, int xll, int yll, int xur, int yur,
                          int type) const {
    int n = d_.n;
    int count = 0;
    auto row_inside = [&](int r) { return r >= yll && r < yur; };
    switch (type) {
        case 0:
            for (int c = xll; c < xur; ++c) count += row_inside(mark[c]);
            break;
        case 1:
            for (int c = 0; c < xll; ++c) count += !row_inside(mark[c]);
            for (int c = xur; c < n; ++c) count += !row_inside(mark[c]);
            break;
        case 2:
            for (int c = xll; c < xur; ++c) count += !row_inside(mark[c]);
            break;
        case 3:
            for (int c = 0; c < xll; ++c) count += row_inside(mark[c]);
            for (int c = xur; c < n; ++c) count += row_inside(mark[c]);
            break;
    }
    return count;
}

GridComplex::GridComplex(const GridDiagram& d) : d_(d) {
    require_valid(d);
    int n = d_.n;
    for (int t = 0; t < 4; ++t) {
        o_free_[t].assign(n * n * n * n, 0);
        ox_free_[t].assign(n * n * n * n, 0);
    }
    for (int xll = 0; xll < n; ++xll)
        for (int xur = xll + 1; xur < n; ++xur)
            for (int yll = 0; yll < n; ++yll)
                for (int yur = yll + 1; yur < n; ++yur)
                    for (int t = 0; t < 4; ++t) {
                        int no = marks_in(d_.o, xll, yll, xur, yur, t);
                        int nx = marks_in(d_.x, xll, yll, xur, yur, t);
                        o_free_[t][idx(xll, yll, xur, yur)] = (no == 0);
                        ox_free_[t][idx(xll, yll, xur, yur)] = (no == 0 && nx == 0);
                    }
}

template <bool BlockX>
void GridComplex::boundary(const GridState& s, std::vector<GridState>& out) const {
    out.clear();
    int n = d_.n;
    const auto& free = BlockX ? ox_free_ : o_free_;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int a = s[i], b = s[j];
            bool r1, r2;
            if (a < b) {
                int id = idx(i, a, j, b);
                r1 = free[0][id];
                for (int k = i + 1; k < j && r1; ++k)
                    if (s[k] > a && s[k] < b) r1 = false;
                r2 = free[1][id];
                for (int k = 0; k < i && r2; ++k)
                    if (s[k] < a || s[k] > b) r2 = false;
                for (int k = j + 1; k < n && r2; ++k)
                    if (s[k] < a || s[k] > b) r2 = false;
            } else {
                int id = idx(i, b, j, a);
                r1 = free[2][id];
                for (int k = i + 1; k < j && r1; ++k)
                    if (s[k] < b || s[k] > a) r1 = false;
                r2 = free[3][id];
                for (int k = 0; k < i && r2; ++k)
                    if (s[k] > b && s[k] < a) r2 = false;
                for (int k = j + 1; k < n && r2; ++k)
                    if (s[k] > b && s[k] < a) r2 = false;
            }
            if (r1 != r2) out.push_back(s.swapped(i, j));  // parity over F2
        }
    }
}

void GridComplex::boundary_blocked(const GridState& s, std::vector<GridState>& out) const {
    boundary<true>(s, out);
}

void GridComplex::boundary_o_blocked(const GridState& s, std::vector<GridState>& out) const {
    boundary<false>(s, out);
}

}  // namespace gridknot
