#include "ehrhart/lr_hives.hpp"

#include <array>
#include <charconv>
#include <future>
#include <map>
#include <numeric>

namespace ehrhart {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i)
    {
        if (parts_[i] < 0)
            throw HiveError("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw HiveError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

long Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::scaled(long t) const
{
    std::vector<long> out(parts_);
    for (auto& x : out)
        x *= t;
    return Partition(out);
}

Partition parse_partition(std::string_view text)
{
    std::vector<long> parts;
    while (!text.empty())
    {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        long value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw HiveError("bad partition entry '" + std::string(item) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return Partition(parts);
}

std::string format_partition(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        out += (i ? "," : "") + std::to_string(p.parts()[i]);
    return out;
}

int hive_size(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    return std::max({lambda.length(), mu.length(), nu.length(), 1});
}

int interior_entries(int size)
{
    return size >= 3 ? (size - 1) * (size - 2) / 2 : 0;
}

namespace {

using Cell = std::pair<int, int>;

/// b + c >= a + d
struct Rhombus
{
    Cell a, b, c, d;
};

std::vector<Rhombus> rhombi(int n)
{
    // up triangles {(i,j),(i+1,j),(i,j+1)}, down triangles {(i+1,j),(i,j+1),(i+1,j+1)}
    std::vector<std::array<Cell, 3>> up, down;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
        {
            if (i + j + 1 <= n)
                up.push_back({Cell{i, j}, Cell{i + 1, j}, Cell{i, j + 1}});
            if (i + j + 2 <= n)
                down.push_back({Cell{i + 1, j}, Cell{i, j + 1}, Cell{i + 1, j + 1}});
        }
    std::vector<Rhombus> out;
    for (const auto& u : up)
        for (const auto& w : down)
        {
            std::vector<Cell> shared, rest;
            for (const auto& x : u)
                (std::find(w.begin(), w.end(), x) != w.end() ? shared : rest).push_back(x);
            if (shared.size() != 2)
                continue;
            for (const auto& x : w)
                if (std::find(u.begin(), u.end(), x) == u.end())
                    rest.push_back(x);
            out.push_back({rest[0], shared[0], shared[1], rest[1]});
        }
    return out;
}

class HiveCounter
{
    public:
        HiveCounter(const Partition& lambda, const Partition& mu, const Partition& nu, int n)
        {
            for (int i = 0; i <= n; ++i)
                for (int j = 0; i + j <= n; ++j)
                    index_[{i, j}] = static_cast<int>(value_.size()), value_.push_back(0);
            auto at = [&](int i, int j) -> long& { return value_[index_.at({i, j})]; };
            at(0, 0) = 0;
            for (int j = 1; j <= n; ++j)
            {
                at(j, 0) = at(j - 1, 0) + nu[j];
                at(0, j) = at(0, j - 1) + lambda[j];
            }
            // the bottom edge runs from (0, n) to (n, 0)
            for (int j = 1; j < n; ++j)
                at(j, n - j) = at(j - 1, n - j + 1) + mu[j];
            consistent_ = at(n, 0) == at(n - 1, 1) + mu[n];

            // interior cells row by row from the apex
            for (int r = 2; r <= n - 1; ++r)
                for (int i = 1; i < r; ++i)
                    order_.push_back(index_.at({i, r - i}));
            std::vector<int> position(value_.size(), -1);
            for (std::size_t k = 0; k < order_.size(); ++k)
                position[order_[k]] = static_cast<int>(k);
            checks_.resize(order_.size());
            for (const auto& rh : rhombi(n))
            {
                std::array<int, 4> ids{index_.at(rh.a), index_.at(rh.b), index_.at(rh.c), index_.at(rh.d)};
                int last = -1;
                for (int id : ids)
                    last = std::max(last, position[id]);
                if (last < 0)
                    border_.push_back(ids);
                else
                    checks_[last].push_back(ids);
            }
        }

        Integer count(unsigned workers)
        {
            if (!consistent_)
                return 0;
            for (const auto& ids : border_)
                if (value_[ids[1]] + value_[ids[2]] < value_[ids[0]] + value_[ids[3]])
                    return 0;
            if (order_.empty())
                return 1;
            auto [lo, hi] = bounds(0, value_);
            if (workers <= 1 || hi - lo < 1)
                return Integer(descend(0, value_));
            std::vector<std::future<long long>> parts;
            for (unsigned w = 0; w < workers; ++w)
                parts.push_back(std::async(std::launch::async, [this, w, workers, lo = lo, hi = hi] {
                    std::vector<long> local = value_;
                    long long total = 0;
                    for (long v = lo + static_cast<long>(w); v <= hi; v += static_cast<long>(workers))
                    {
                        local[order_[0]] = v;
                        total += descend(1, local);
                    }
                    return total;
                }));
            Integer total = 0;
            for (auto& f : parts)
                total += f.get();
            return total;
        }

    private:
        /// Interval for the k-th interior cell from the rhombi it completes.
        std::pair<long, long> bounds(std::size_t k, const std::vector<long>& v) const
        {
            const int self = order_[k];
            long lo = 0, hi = std::numeric_limits<long>::max();
            for (const auto& ids : checks_[k])
            {
                // b + c - a - d >= 0 with self in exactly one role
                long rest = 0;
                int sign = 0;
                for (int role = 0; role < 4; ++role)
                {
                    const int s = role == 1 || role == 2 ? 1 : -1;
                    if (ids[role] == self)
                        sign = s;
                    else
                        rest += s * v[ids[role]];
                }
                if (sign > 0)
                    lo = std::max(lo, -rest);
                else
                    hi = std::min(hi, rest);
            }
            return {lo, hi};
        }

        long long descend(std::size_t k, std::vector<long>& v) const
        {
            if (k == order_.size())
                return 1;
            auto [lo, hi] = bounds(k, v);
            if (hi == std::numeric_limits<long>::max())
                throw HiveError("hive entry without an upper bound");
            long long total = 0;
            for (long x = lo; x <= hi; ++x)
            {
                v[order_[k]] = x;
                total += descend(k + 1, v);
            }
            return total;
        }

        bool consistent_ = true;
        std::map<Cell, int> index_;
        std::vector<long> value_;
        std::vector<int> order_;
        std::vector<std::vector<std::array<int, 4>>> checks_;
        std::vector<std::array<int, 4>> border_;
};

}  // namespace

Integer hive_count(const Partition& lambda, const Partition& mu, const Partition& nu, int size, unsigned workers)
{
    const int minimum = hive_size(lambda, mu, nu);
    if (size == 0)
        size = minimum;
    if (size < minimum)
        throw HiveError("hive size smaller than a partition length");
    if (nu.size() != lambda.size() + mu.size())
        return 0;
    return HiveCounter(lambda, mu, nu, size).count(workers);
}

std::vector<Integer> stretched_values(const Partition& lambda, const Partition& mu, const Partition& nu, long t_max)
{
    std::vector<Integer> out;
    for (long t = 1; t <= t_max; ++t)
        out.push_back(hive_count(lambda.scaled(t), mu.scaled(t), nu.scaled(t)));
    return out;
}

std::optional<RationalPolynomial> stretched_fit(const Partition& lambda, const Partition& mu, const Partition& nu,
                                                int degree_bound)
{
    if (degree_bound < 0)
        degree_bound = interior_entries(hive_size(lambda, mu, nu));
    auto values = stretched_values(lambda, mu, nu, degree_bound + 2);
    std::vector<Rational> nodes{Rational(1)};
    for (int t = 1; t <= degree_bound; ++t)
        nodes.emplace_back(values[t - 1]);
    RationalPolynomial f = interpolate_consecutive(nodes);
    for (long t = degree_bound + 1; t <= degree_bound + 2; ++t)
        if (f(t) != Rational(values[t - 1]))
            return std::nullopt;
    return f;
}

}  // namespace ehrhart
