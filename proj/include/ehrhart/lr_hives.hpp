#pragma once

#include <optional>
#include <vector>

#include "ehrhart/exact.hpp"

namespace ehrhart {

class HiveError : public std::runtime_error
{
    public:
        explicit HiveError(const std::string& what) : std::runtime_error(what) {}
};

/// Weakly decreasing nonnegative parts with trailing zeros removed.
class Partition
{
    public:
        Partition() = default;
        Partition(std::vector<long> parts);
        Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

        const std::vector<long>& parts() const { return parts_; }
        long size() const;
        int length() const { return static_cast<int>(parts_.size()); }
        /// Part j (1-based), zero past the length.
        long operator[](int j) const { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }
        Partition scaled(long t) const;

        friend bool operator==(const Partition&, const Partition&) = default;

    private:
        std::vector<long> parts_;
};

/// Parses "4,3,1"; the empty string is the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

/// Smallest hive size that fits all three partitions.
int hive_size(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Number of LR-hives of type (nu, lambda, mu) of the given size (0 picks
/// hive_size). Zero when |nu| != |lambda| + |mu|.
Integer hive_count(const Partition& lambda, const Partition& mu, const Partition& nu, int size = 0,
                   unsigned workers = 1);

/// c_{t lambda, t mu}^{t nu} for t = 1..t_max.
std::vector<Integer> stretched_values(const Partition& lambda, const Partition& mu, const Partition& nu, long t_max);

/// Number of interior hive entries, the default degree bound for fitting.
int interior_entries(int size);

/// Interpolates f(0) = 1 and the stretched values at t = 1..degree_bound,
/// then checks the next two values. nullopt when the check fails.
std::optional<RationalPolynomial> stretched_fit(const Partition& lambda, const Partition& mu, const Partition& nu,
                                                int degree_bound = -1);

}  // namespace ehrhart
