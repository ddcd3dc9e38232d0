#include "wirtlab/word.hpp"

#include <algorithm>

namespace wirtlab {

Word::Word(std::vector<Letter> letters) {
    for (const auto& l : letters) push(l);
}

void Word::push(Letter l) {
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0) letters_.pop_back();
    } else {
        letters_.push_back(l);
    }
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->gen, -it->exp});
    return w;
}

Word Word::pow(int n) const {
    Word base = n >= 0 ? *this : inverse();
    Word out;
    for (int k = 0; k < std::abs(n); ++k) out = out * base;
    return out;
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    for (const auto& l : b.letters_) out.push(l);
    return out;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w.letters()) {
        if (!s.empty()) s += ' ';
        s += 'x' + std::to_string(l.gen);
        if (l.exp != 1) s += '^' + std::to_string(l.exp);
    }
    return s;
}

}  // namespace wirtlab
