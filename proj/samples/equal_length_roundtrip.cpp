// Store a codeword of C_{1,2,4} over Z_3, push it through a few equal-length
// tandem duplications and recover it.

#include <iostream>

#include "tdcode/tdcode.hpp"

int main() {
    using namespace tdcode;
    const Alphabet a(3);
    const LengthSpec spec = make_length_spec({1, 2, 4}, Construction::equal_length);
    const Code code = enumerate_code(10, a, spec.forbidden);
    std::cout << "|C| = " << code.members.size() << ", rate = " << rate(code.members.size(), 10, 3) << '\n';

    const Word& x = code.members[code.members.size() / 2];
    const Corruption c = sample_corruption(x, Model::equal_length, spec.lengths, 3, 2024);
    const DecodeResult r = decode_equal_length(c.word, spec, 10, a);

    std::cout << "stored   " << format_word(x, a) << '\n'
              << "received " << format_word(c.word, a) << '\n'
              << "decoded  " << format_word(r.codeword, a) << " (" << to_string(r.status) << ", l=" << *r.length_used
              << ")\n";
    return r.codeword == x ? 0 : 1;
}
