#include "wirtlab/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "wirtlab/errors.hpp"

namespace wirtlab {

namespace {

std::string describe(const Visit& v) {
    std::string s(1, v.pass == Pass::Over ? 'O' : 'U');
    s += std::to_string(v.id);
    s += v.sign > 0 ? '+' : '-';
    return s;
}

}  // namespace

GaussCode::GaussCode(std::vector<Visit> visits) : visits_(std::move(visits)) {
    std::map<int, int> over_seen, under_seen;
    for (std::size_t i = 0; i < visits_.size(); ++i) {
        const Visit& v = visits_[i];
        if (v.id <= 0)
            throw Error(ErrorKind::Validation, "crossing id must be positive: " + describe(v));
        if (v.sign != 1 && v.sign != -1)
            throw Error(ErrorKind::Validation, "sign must be +1 or -1 at " + describe(v));
        auto& counter = v.pass == Pass::Over ? over_seen : under_seen;
        if (++counter[v.id] > 1) {
            throw Error(ErrorKind::Validation,
                        "crossing " + std::to_string(v.id) + " has two " +
                            (v.pass == Pass::Over ? "Over" : "Under") + " visits");
        }
        Sites& s = sites_[v.id];
        if (v.pass == Pass::Over) s.over = i; else s.under = i;
    }
    for (const auto& [id, s] : sites_) {
        if (!over_seen.count(id) || !under_seen.count(id))
            throw Error(ErrorKind::Validation,
                        "crossing " + std::to_string(id) + " has one visit");
        if (visits_[s.over].sign != visits_[s.under].sign)
            throw Error(ErrorKind::Validation,
                        "crossing " + std::to_string(id) + " has mismatched signs");
    }
    for (auto& [id, s] : sites_) s.sign = visits_[s.over].sign;
}

std::vector<int> GaussCode::crossing_ids() const {
    std::vector<int> ids;
    ids.reserve(sites_.size());
    for (const auto& kv : sites_) ids.push_back(kv.first);
    return ids;
}

const GaussCode::Sites& GaussCode::sites(int id) const {
    auto it = sites_.find(id);
    if (it == sites_.end())
        throw Error(ErrorKind::UnknownCrossing, "no crossing " + std::to_string(id));
    return it->second;
}

GaussCode parse_gauss_code(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) continue;
        // U+2212 MINUS SIGN is accepted as '-'.
        if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            compact += '-';
            i += 2;
            continue;
        }
        compact += static_cast<char>(std::toupper(c));
    }
    std::vector<Visit> visits;
    if (compact.empty()) return GaussCode{};
    std::size_t pos = 0;
    while (true) {
        std::size_t end = compact.find(',', pos);
        std::string tok = compact.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
            throw Error(ErrorKind::Syntax, "bad token '" + tok + "'");
        char s = tok.back();
        if (s != '+' && s != '-') throw Error(ErrorKind::Syntax, "bad sign in token '" + tok + "'");
        std::string digits = tok.substr(1, tok.size() - 2);
        if (digits.empty() || digits.size() > 9 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw Error(ErrorKind::Syntax, "bad crossing id in token '" + tok + "'");
        visits.push_back({std::stoi(digits), tok[0] == 'O' ? Pass::Over : Pass::Under, s == '+' ? 1 : -1});
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return GaussCode(std::move(visits));
}

std::string to_text(const GaussCode& code) {
    std::string out;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) out += ',';
        out += describe(code[i]);
    }
    return out;
}

GaussCode rotate(const GaussCode& code, std::size_t start) {
    const auto& v = code.visits();
    if (v.empty()) return code;
    std::vector<Visit> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(v[(start + k) % v.size()]);
    return GaussCode(std::move(out));
}

GaussCode relabel(const GaussCode& code, const std::map<int, int>& ids) {
    std::vector<Visit> out = code.visits();
    for (auto& v : out) {
        auto it = ids.find(v.id);
        if (it == ids.end()) throw Error(ErrorKind::UnknownCrossing, "relabel misses " + std::to_string(v.id));
        v.id = it->second;
    }
    return GaussCode(std::move(out));
}

GaussCode relabel_by_first_appearance(const GaussCode& code) {
    std::map<int, int> ids;
    for (const auto& v : code.visits()) ids.emplace(v.id, static_cast<int>(ids.size()) + 1);
    return relabel(code, ids);
}

namespace {

// Relabeled visit sequence for a rotation, without building a GaussCode.
std::vector<std::tuple<int, int, int>> rotated_key(const std::vector<Visit>& v, std::size_t start) {
    std::vector<std::tuple<int, int, int>> key;
    key.reserve(v.size());
    std::map<int, int> ids;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Visit& x = v[(start + k) % v.size()];
        auto [it, fresh] = ids.emplace(x.id, static_cast<int>(ids.size()) + 1);
        key.emplace_back(it->second, x.pass == Pass::Over ? 0 : 1, x.sign);
    }
    return key;
}

}  // namespace

GaussCode canonical_form(const GaussCode& code) {
    const auto& v = code.visits();
    if (v.empty()) return code;
    std::size_t best = 0;
    auto best_key = rotated_key(v, 0);
    for (std::size_t s = 1; s < v.size(); ++s) {
        auto key = rotated_key(v, s);
        if (key < best_key) {
            best_key = std::move(key);
            best = s;
        }
    }
    return relabel_by_first_appearance(rotate(code, best));
}

std::string canonical_key(const GaussCode& code) { return to_text(canonical_form(code)); }

}  // namespace wirtlab
