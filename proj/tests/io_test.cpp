#include <doctest.h>

#include <sstream>

#include "onemap/io.hpp"

using namespace onemap;

TEST_CASE("plain input strips trailing newlines only") {
    std::istringstream in("abab\n");
    auto texts = load_texts(in, InputFormat::Plain);
    REQUIRE(texts.size() == 1);
    CHECK(texts[0].n == 4);
    CHECK(texts[0].record_id.empty());
}

TEST_CASE("fasta records stay independent and uppercased") {
    std::istringstream in(">seq1 first record\nacgt\nACGT\n>seq2\nnnNN\n");
    auto texts = load_texts(in, InputFormat::Auto);
    REQUIRE(texts.size() == 2);
    CHECK(texts[0].record_id == "seq1");
    CHECK(texts[0].n == 8);
    CHECK(texts[0].at(1) == texts[0].at(5)); // acgt == ACGT after mapping
    CHECK(texts[1].record_id == "seq2");
    CHECK(texts[1].n == 4);
    CHECK(texts[1].alphabet_size == 1); // all N
}

TEST_CASE("auto sniffing falls back to plain") {
    std::istringstream in("banana");
    auto texts = load_texts(in, InputFormat::Auto);
    REQUIRE(texts.size() == 1);
    CHECK(texts[0].n == 6);
    CHECK(texts[0].alphabet_size == 3);
}
