#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wirtlab {

enum class Pass : std::uint8_t { Over, Under };

struct Visit {
    int id = 0;
    Pass pass = Pass::Over;
    int sign = 1;
    friend bool operator==(const Visit&, const Visit&) = default;
};

// Cyclic sequence of classical crossing visits of a one-component diagram.
// Virtual crossings carry no symbol, so virtually equivalent diagrams share a code.
class GaussCode {
public:
    struct Sites {
        std::size_t over = 0;
        std::size_t under = 0;
        int sign = 1;
    };

    GaussCode() = default;
    // Throws ValidationError unless every id occurs once Over and once Under
    // with a common sign.
    explicit GaussCode(std::vector<Visit> visits);

    const std::vector<Visit>& visits() const noexcept { return visits_; }
    const Visit& operator[](std::size_t i) const { return visits_[i]; }
    std::size_t size() const noexcept { return visits_.size(); }
    bool empty() const noexcept { return visits_.empty(); }
    std::size_t crossing_count() const noexcept { return sites_.size(); }

    std::vector<int> crossing_ids() const;
    bool has_crossing(int id) const { return sites_.count(id) != 0; }
    // Throws UnknownCrossing.
    const Sites& sites(int id) const;
    int max_id() const { return sites_.empty() ? 0 : sites_.rbegin()->first; }

    friend bool operator==(const GaussCode& a, const GaussCode& b) { return a.visits_ == b.visits_; }

private:
    std::vector<Visit> visits_;
    std::map<int, Sites> sites_;
};

// Tokens `O<k><s>` / `U<k><s>` separated by commas; whitespace ignored,
// case-insensitive, sign '+' or '-'.
GaussCode parse_gauss_code(std::string_view text);
std::string to_text(const GaussCode& code);

GaussCode rotate(const GaussCode& code, std::size_t start);
// Renumbers crossings 1..n in order of first appearance.
GaussCode relabel_by_first_appearance(const GaussCode& code);
GaussCode relabel(const GaussCode& code, const std::map<int, int>& ids);
// Minimum over rotations of the first-appearance relabeling; equal for codes
// that differ by rotation and crossing renumbering.
GaussCode canonical_form(const GaussCode& code);
std::string canonical_key(const GaussCode& code);

}  // namespace wirtlab
