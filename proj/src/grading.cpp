#include "gridknot/grading.hpp"

#include <stdexcept>

namespace gridknot {

int maslov_against(const std::vector<int>& mark, const GridState& s) {
    int n = static_cast<int>(mark.size());
    int i_ss = 0, i_sm = 0, i_ms = 0, i_mm = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i < j && s[i] < s[j]) ++i_ss;
            if (i < j && mark[i] < mark[j]) ++i_mm;
            // state (i, s[i]) vs marking (j + 1/2, mark[j] + 1/2)
            if (i <= j && s[i] <= mark[j]) ++i_sm;
            // marking (j + 1/2, ...) southwest of state (i, s[i])
            if (j < i && mark[j] < s[i]) ++i_ms;
        }
    }
    return i_ss - i_sm - i_ms + i_mm + 1;
}

Bigrading bigrading(const GridDiagram& d, const GridState& s) {
    if (s.size() != d.n) throw std::invalid_argument("bigrading: state size mismatch");
    int mo = maslov_against(d.o, s);
    int mx = maslov_against(d.x, s);
    return Bigrading{mo, mo - mx - (d.n - 1)};
}

}  // namespace gridknot
