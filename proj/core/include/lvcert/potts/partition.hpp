#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lvcert {

/// Integer partition with non-increasing positive parts.
using Partition = std::vector<int>;

/// All partitions of d in reverse lexicographic order: 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
std::vector<Partition> partitions_of(int d);

/// Sorted colour frequencies of a nonempty multiset.
Partition partition_of_multiset(std::span<const int> colours);

/// "2+1+1".
std::string partition_label(const Partition& p);
Partition parse_partition(std::string_view label);

/// Position of p in partitions_of(d); -1 if absent.
int partition_index(const std::vector<Partition>& all, const Partition& p);

}  // namespace lvcert
