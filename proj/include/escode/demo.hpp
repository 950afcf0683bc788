#pragma once

#include <vector>

#include "escode/coder.hpp"

namespace escode {

/// The classic 7-symbol binary example used by the paper-table subcommand:
/// p = (0.48, 0.3, 0.1, 0.05, 0.05, 0.01, 0.01).
Distribution demo_distribution();

/// One column of the reference comparison: the escort-Huffman code built at
/// q, checked against the published reference lengths. A column passes when
/// the length multisets agree, or failing that, when the built code's M_q
/// matches the reference lengths' M_q to 1e-12 (optimal values are unique
/// even when tie-breaking picks a different optimal tree).
struct DemoColumn {
    double q;
    std::vector<int> reference_lengths;
    Codebook book;
    std::vector<int> built_lengths;   // sorted copy of the book's lengths
    double m_q_built;
    double m_q_reference;
    bool multiset_match;
    bool pass;
};

std::vector<DemoColumn> demo_table();

} // namespace escode
