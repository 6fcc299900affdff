#include <lvcert/potts/partition.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lvcert {

namespace {

void extend(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        extend(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d)
{
    if (d < 1)
        throw std::invalid_argument("partitions_of: d must be positive");
    std::vector<Partition> out;
    Partition prefix;
    extend(d, d, prefix, out);
    return out;
}

Partition partition_of_multiset(std::span<const int> colours)
{
    if (colours.empty())
        throw std::invalid_argument("partition_of_multiset: empty multiset");
    std::map<int, int> freq;
    for (int c : colours)
        ++freq[c];
    Partition p;
    for (auto [c, k] : freq)
        p.push_back(k);
    std::sort(p.rbegin(), p.rend());
    return p;
}

std::string partition_label(const Partition& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0)
            s += '+';
        s += std::to_string(p[i]);
    }
    return s;
}

Partition parse_partition(std::string_view label)
{
    Partition p;
    std::string part;
    auto flush = [&]() {
        if (part.empty())
            throw std::invalid_argument("malformed partition label");
        p.push_back(std::stoi(part));
        part.clear();
    };
    for (char c : label) {
        if (c == '+')
            flush();
        else if (c >= '0' && c <= '9')
            part += c;
        else if (c != ' ')
            throw std::invalid_argument("malformed partition label");
    }
    flush();
    if (!std::is_sorted(p.rbegin(), p.rend()) || p.back() < 1)
        throw std::invalid_argument("partition parts must be positive and non-increasing");
    return p;
}

int partition_index(const std::vector<Partition>& all, const Partition& p)
{
    auto it = std::find(all.begin(), all.end(), p);
    return it == all.end() ? -1 : static_cast<int>(it - all.begin());
}

}  // namespace lvcert
