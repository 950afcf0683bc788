#include "escode/demo.hpp"

#include <algorithm>
#include <cmath>

namespace escode {

Distribution demo_distribution() {
    return Distribution({0.48, 0.30, 0.10, 0.05, 0.05, 0.01, 0.01});
}

std::vector<DemoColumn> demo_table() {
    const Distribution p = demo_distribution();
    const std::vector<std::pair<double, std::vector<int>>> reference = {
        {1.0, {1, 2, 3, 4, 5, 6, 6}},
        {0.7, {1, 2, 4, 4, 4, 5, 5}},
        {0.4, {2, 2, 3, 3, 3, 4, 4}},
    };
    std::vector<DemoColumn> table;
    for (const auto& [q, ref] : reference) {
        Codebook book = escort_huffman(p, q, 2);
        std::vector<int> built(book.size());
        for (std::size_t i = 0; i < book.size(); ++i)
            built[i] = static_cast<int>(book.codeword(i).size());
        std::sort(built.begin(), built.end());
        const double m_built = escort_mean_length(p, book.lengths(), q);
        const double m_ref = escort_mean_length(p, LengthVector::from_ints(ref), q);
        const bool multiset = built == ref; // reference rows are already sorted
        const bool pass = multiset || std::abs(m_built - m_ref) <= 1e-12;
        table.push_back({q, ref, std::move(book), std::move(built),
                         m_built, m_ref, multiset, pass});
    }
    return table;
}

} // namespace escode
