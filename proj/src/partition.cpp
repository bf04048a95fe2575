#include "symrep/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace symrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        total_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(size_t(parts_[0]), 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c) cols[size_t(c)]++;
    }
    return Partition(std::move(cols));
}

Int Partition::hook_dimension() const {
    Partition conj = conjugate();
    Int hooks = 1;
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < parts_[size_t(r)]; ++c) {
            int arm = parts_[size_t(r)] - c - 1;
            int leg = conj.part(c) - r - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(total_) / hooks;
}

Int Partition::symmetry_factor() const {
    std::map<int, int> mult;
    for (int p : parts_) mult[p]++;
    Int z = 1;
    for (auto [len, m] : mult) {
        for (int i = 0; i < m; ++i) z *= len;
        z *= factorial(m);
    }
    return z;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad partition text: " + text);
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition text");
    return Partition(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        stack.push_back(next);
        emit_partitions(remaining - next, next, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(n, n, stack, out);
    return out;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace symrep
