#include "symrep/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symrep {

Permutation::Permutation(std::vector<uint8_t> image) : img_(std::move(image)) {
    std::vector<bool> seen(img_.size(), false);
    for (uint8_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw std::invalid_argument("image sequence is not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<uint8_t> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), uint8_t(0));
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.img_[size_t(a)], p.img_[size_t(b)]);
    return p;
}

bool Permutation::is_identity() const {
    for (int k = 0; k < n(); ++k)
        if (img_[size_t(k)] != k) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int k = 0; k < n(); ++k) {
        if (k) os << ' ';
        os << int(img_[size_t(k)]) + 1;
    }
    os << ']';
    return os.str();
}

Permutation Permutation::parse(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            throw std::invalid_argument("unbalanced brackets in permutation: " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<uint8_t> img;
    if (body.find_first_of(" \t,") != std::string::npos) {
        std::istringstream is(body);
        std::string item;
        while (is >> item) {
            if (!item.empty() && item.back() == ',') item.pop_back();
            if (item.empty()) continue;
            int v = std::stoi(item);
            if (v < 1) throw std::invalid_argument("permutation symbols are 1-based: " + text);
            img.push_back(uint8_t(v - 1));
        }
    } else {
        // Compact digit form "213"; only unambiguous for n <= 9.
        for (char c : body) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad digit in compact permutation: " + text);
            img.push_back(uint8_t(c - '1'));
        }
    }
    if (img.empty()) throw std::invalid_argument("empty permutation text");
    return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("size mismatch composing permutations of degree " +
                                    std::to_string(a.n()) + " and " + std::to_string(b.n()));
    std::vector<uint8_t> img(static_cast<size_t>(a.n()));
    for (int k = 0; k < a.n(); ++k) img[size_t(k)] = b[a[k]];
    return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
    std::vector<uint8_t> img(static_cast<size_t>(p.n()));
    for (int k = 0; k < p.n(); ++k) img[p[k]] = uint8_t(k);
    return Permutation(std::move(img));
}

int parity(const Permutation& p) {
    int cycles = 0;
    std::vector<bool> seen(size_t(p.n()), false);
    for (int k = 0; k < p.n(); ++k) {
        if (seen[size_t(k)]) continue;
        ++cycles;
        for (int j = k; !seen[size_t(j)]; j = p[j]) seen[size_t(j)] = true;
    }
    return ((p.n() - cycles) % 2 == 0) ? +1 : -1;
}

Partition cycle_type(const Permutation& p) {
    std::vector<int> lens;
    std::vector<bool> seen(size_t(p.n()), false);
    for (int k = 0; k < p.n(); ++k) {
        if (seen[size_t(k)]) continue;
        int len = 0;
        for (int j = k; !seen[size_t(j)]; j = p[j]) {
            seen[size_t(j)] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<uint8_t> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), uint8_t(0));
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace symrep
