#pragma once

#include <vector>

namespace regimecast {

// Table over a set of discrete variables, flattened row-major with the last
// variable's index varying fastest. Variables are integer ids.
struct Factor {
    std::vector<int> vars;
    std::vector<int> cards;
    std::vector<double> values;

    static Factor unit() { return Factor{{}, {}, {1.0}}; }

    std::size_t table_size() const;
    double& at(const std::vector<int>& states);  // states aligned with vars
    double at(const std::vector<int>& states) const;

    Factor multiply(const Factor& other) const;
    Factor sum_out(int var) const;
    Factor reduce(int var, int state) const;  // drops the variable
    double total() const;
};

}  // namespace regimecast
