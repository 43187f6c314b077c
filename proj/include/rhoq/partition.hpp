#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rhoq {

/// One integer partition: positive parts in non-increasing order, with the
/// total cached at construction.
class Partition {
public:
    /// The empty partition of 0.
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        long long sum = 0;
        int prev = 0;
        for (const int part : parts_) {
            if (part < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (prev != 0 && part > prev)
                throw std::invalid_argument("Partition: parts must be non-increasing");
            sum += part;
            prev = part;
        }
        total_ = sum;
    }

    const std::vector<int>& parts() const { return parts_; }
    long long total() const { return total_; }
    bool empty() const { return parts_.empty(); }

    /// True when some part has exactly this numeric size.
    bool contains(int size) const {
        for (const int part : parts_) {
            if (part == size) return true;
            if (part < size) return false;  // parts are non-increasing
        }
        return false;
    }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    long long total_ = 0;
};

/// "5+3+1+1"; the empty partition renders as "0".
inline std::string format_partition(const Partition& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

/// Sum of the distinct part sizes (each size counted once however often it
/// repeats). Parts must be sorted, which the enumerator guarantees.
inline long long distinct_part_sum(std::span<const int> parts) {
    long long sum = 0;
    int prev = 0;
    for (const int part : parts) {
        if (part != prev) {
            sum += part;
            prev = part;
        }
    }
    return sum;
}

/// Number of distinct part sizes.
inline int distinct_part_count(std::span<const int> parts) {
    int count = 0;
    int prev = 0;
    for (const int part : parts) {
        if (part != prev) {
            ++count;
            prev = part;
        }
    }
    return count;
}

/// Streams every partition of n exactly once, in descending lexicographic
/// order: [n] first, [1,1,...,1] last. For n = 0 the stream holds exactly the
/// empty partition.
///
/// Successor rule: locate the rightmost part greater than 1, reduce it by
/// one, and repack it together with the trailing 1s greedily into parts no
/// larger than the reduced value. Each step touches only the tail, so the
/// whole walk is linear in the output size.
class PartitionStream {
public:
    explicit PartitionStream(int n) {
        if (n < 0) throw std::invalid_argument("PartitionStream: n must be >= 0");
        if (n > 0) parts_.push_back(n);
    }

    /// Next partition as a view into an internal buffer; the view stays valid
    /// until the following call. Empty optional once exhausted.
    std::optional<std::span<const int>> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            return std::span<const int>(parts_);
        }
        if (!advance()) {
            done_ = true;
            return std::nullopt;
        }
        return std::span<const int>(parts_);
    }

private:
    bool advance() {
        // the all-ones partition (or the empty one) is the last
        if (parts_.empty() || parts_.front() == 1) return false;
        std::size_t h = parts_.size() - 1;
        while (parts_[h] == 1) --h;
        const int reduced = parts_[h] - 1;
        long long remainder = parts_[h] + static_cast<long long>(parts_.size() - 1 - h);
        parts_.resize(h);
        while (remainder > 0) {
            const int part = remainder < reduced ? static_cast<int>(remainder) : reduced;
            parts_.push_back(part);
            remainder -= part;
        }
        return true;
    }

    std::vector<int> parts_;
    bool started_ = false;
    bool done_ = false;
};

/// Visits every partition of n in descending lexicographic order. The span
/// argument aliases a buffer owned by the enumerator; copy it to keep it.
template <typename Visit>
void for_each_partition(int n, Visit&& visit) {
    PartitionStream stream(n);
    while (auto parts = stream.next()) visit(*parts);
}

/// Materializes the full stream. Convenient for small n; the callback form
/// is the one to use in counting loops.
inline std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> result;
    for_each_partition(n, [&](std::span<const int> parts) {
        result.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return result;
}

}  // namespace rhoq
