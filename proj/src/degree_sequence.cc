#include <fiedler/degree_sequence.hh>

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

using std::string;
using std::string_view;
using std::vector;

namespace fiedler
{
    auto DegreeSequence::parse(string_view text) -> DegreeSequence
    {
        vector<int> degrees;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            auto token = text.substr(pos, comma == string_view::npos ? string_view::npos : comma - pos);
            while (! token.empty() && (token.front() == ' ' || token.front() == '\t'))
                token.remove_prefix(1);
            while (! token.empty() && (token.back() == ' ' || token.back() == '\t'))
                token.remove_suffix(1);

            int value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
                throw InvalidSequence{"cannot parse degree '" + string{token} + "' in '" + string{text} + "'"};
            degrees.push_back(value);

            if (comma == string_view::npos)
                break;
            pos = comma + 1;
        }
        return DegreeSequence{std::move(degrees)};
    }

    auto DegreeSequence::sorted_descending() const -> DegreeSequence
    {
        auto d = degrees_;
        std::sort(d.begin(), d.end(), std::greater<>{});
        return DegreeSequence{std::move(d)};
    }

    auto DegreeSequence::count_of(int degree) const -> int
    {
        return static_cast<int>(std::count(degrees_.begin(), degrees_.end(), degree));
    }

    auto DegreeSequence::interior_degrees() const -> vector<int>
    {
        vector<int> result;
        for (auto d : degrees_)
            if (d >= 2)
                result.push_back(d);
        return result;
    }

    auto DegreeSequence::to_string(char separator) const -> string
    {
        string out;
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            if (i)
                out += separator;
            out += std::to_string(degrees_[i]);
        }
        return out;
    }

    auto validate_tree_sequence(const DegreeSequence & seq) -> bool
    {
        auto & d = seq.degrees();
        if (d.size() < 2)
            return false;
        if (std::any_of(d.begin(), d.end(), [](int x) { return x < 1; }))
            return false;
        long sum = std::accumulate(d.begin(), d.end(), 0L);
        return sum == 2L * (static_cast<long>(d.size()) - 1);
    }

    auto require_tree_sequence(const DegreeSequence & seq) -> void
    {
        auto & d = seq.degrees();
        if (d.size() < 2)
            throw InvalidSequence{"a tree sequence needs at least two entries"};
        for (auto x : d)
            if (x < 1)
                throw InvalidSequence{"degree " + std::to_string(x) + " is below 1"};
        long sum = std::accumulate(d.begin(), d.end(), 0L);
        if (sum != 2L * (static_cast<long>(d.size()) - 1))
            throw InvalidSequence{"degrees of (" + seq.to_string() + ") sum to " + std::to_string(sum) + ", a tree on "
                + std::to_string(d.size()) + " vertices needs " + std::to_string(2 * (d.size() - 1))};
    }

    auto degree_sequence(const Tree & t) -> DegreeSequence
    {
        vector<int> d(t.order());
        for (Vertex v = 0; v < t.order(); ++v)
            d[v] = t.degree(v);
        return DegreeSequence{std::move(d)}.sorted_descending();
    }

    auto tree_sequences(int n) -> vector<DegreeSequence>
    {
        vector<DegreeSequence> result;
        if (n < 2)
            return result;

        // distribute the n-2 surplus over n slots, non-increasing
        vector<int> surplus;
        std::function<void(int, int)> fill = [&](int remaining, int cap) {
            if (static_cast<int>(surplus.size()) == n) {
                if (remaining == 0) {
                    vector<int> d(n);
                    std::transform(surplus.begin(), surplus.end(), d.begin(), [](int s) { return s + 1; });
                    result.emplace_back(std::move(d));
                }
                return;
            }
            for (int s = std::min(cap, remaining); s >= 0; --s) {
                surplus.push_back(s);
                fill(remaining - s, s);
                surplus.pop_back();
            }
        };
        fill(n - 2, n - 2);
        return result;
    }

    auto caterpillar_realises(const CaterpillarSpec & spec, const DegreeSequence & seq) -> bool
    {
        for (auto d : spec.spine_degrees)
            if (d < 2)
                return false;
        return degree_sequence(build_caterpillar(spec)) == seq.sorted_descending();
    }
}
