#pragma once

#include <string>
#include <vector>

namespace wirtlab {

struct Letter {
    int gen = 0;
    int exp = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word: adjacent letters have distinct generators, exponents nonzero.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    static Word gen(int g, int exp = 1) { return Word({{g, exp}}); }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    Word inverse() const;
    Word pow(int n) const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;

private:
    void push(Letter l);
    std::vector<Letter> letters_;
};

std::string to_string(const Word& w);

}  // namespace wirtlab
