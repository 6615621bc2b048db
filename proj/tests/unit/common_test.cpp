#include <gtest/gtest.h>

#include "finsphere/common/csv.hpp"
#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"
#include "finsphere/common/time.hpp"
#include "finsphere/common/toml.hpp"
#include "support/store_builder.hpp"

using namespace finsphere;

TEST(DateTest, ParseRoundTrip) {
    const Date d = Date::parse("2024-10-16");
    EXPECT_EQ(d.year(), 2024);
    EXPECT_EQ(d.month(), 10);
    EXPECT_EQ(d.day(), 16);
    EXPECT_EQ(d.to_string(), "2024-10-16");
    EXPECT_EQ(Date::parse("2024-02-29").to_string(), "2024-02-29");  // leap day
}

TEST(DateTest, ParseRejectsGarbage) {
    EXPECT_THROW(Date::parse("2024-13-01"), ParseError);
    EXPECT_THROW(Date::parse("2023-02-29"), ParseError);
    EXPECT_THROW(Date::parse("not a date"), ParseError);
    EXPECT_THROW(Date::parse(""), ParseError);
}

TEST(DateTest, OrderingAndArithmetic) {
    const Date a = Date::parse("2024-10-16");
    EXPECT_LT(Date::parse("2024-10-15"), a);
    EXPECT_EQ(a.plus_days(1).to_string(), "2024-10-17");
    EXPECT_EQ(a.plus_days(-16).to_string(), "2024-09-30");
    EXPECT_EQ(Date(1970, 1, 1).serial(), 0);
    EXPECT_EQ(Date(1970, 1, 31).serial(), 30);
}

TEST(DateTest, Weekdays) {
    const Date friday = Date::parse("2024-10-18");
    EXPECT_FALSE(friday.is_weekend());
    EXPECT_TRUE(friday.plus_days(1).is_weekend());
    EXPECT_TRUE(friday.plus_days(2).is_weekend());
    EXPECT_EQ(friday.next_weekday().to_string(), "2024-10-21");  // Monday
    EXPECT_EQ(Date::parse("2024-10-14").next_weekday().to_string(), "2024-10-15");
}

TEST(InstantTest, BareDateReadsAsEndOfDay) {
    const Instant t = Instant::parse("2024-10-16");
    EXPECT_EQ(t, Instant::end_of_day(Date::parse("2024-10-16")));
    EXPECT_GT(t, Instant::parse("2024-10-16T23:59:58"));
    EXPECT_LT(t, Instant::parse("2024-10-17T00:00:00"));
    EXPECT_EQ(t.date().to_string(), "2024-10-16");
}

TEST(InstantTest, TimestampParsing) {
    const Instant t = Instant::parse("2024-10-16T09:30:00");
    EXPECT_EQ(t.to_string(), "2024-10-16T09:30:00");
    EXPECT_EQ(Instant::parse("2024-10-16T09:30:00Z"), t);
    EXPECT_LT(Instant::start_of_day(Date::parse("2024-10-16")), t);
    EXPECT_THROW(Instant::parse("2024-10-16T25:00:00"), ParseError);
    EXPECT_THROW(Instant::parse("yesterday"), ParseError);
}

TEST(TextTest, FormatNumberTrimsTrailingZeros) {
    EXPECT_EQ(text::format_number(4.48), "4.48");
    EXPECT_EQ(text::format_number(-14.865), "-14.865");
    EXPECT_EQ(text::format_number(17.65), "17.65");
    EXPECT_EQ(text::format_number(2.5), "2.5");
    EXPECT_EQ(text::format_number(3.0), "3");
    EXPECT_EQ(text::format_number(0.0), "0");
    EXPECT_EQ(text::format_number(1.23456789, 2), "1.23");
    EXPECT_EQ(text::format_number(152947000.0), "152947000");
}

TEST(TextTest, FormatFixed2) {
    EXPECT_EQ(text::format_fixed2(70.88), "70.88");
    EXPECT_EQ(text::format_fixed2(9.9), "9.90");
    EXPECT_EQ(text::format_fixed2(100.0), "100.00");
    EXPECT_EQ(text::format_fixed2(-0.5), "-0.50");
}

TEST(TextTest, CountWords) {
    EXPECT_EQ(text::count_words(""), 0u);
    EXPECT_EQ(text::count_words("   "), 0u);
    EXPECT_EQ(text::count_words("one"), 1u);
    EXPECT_EQ(text::count_words("one, two! three."), 3u);
    EXPECT_EQ(text::count_words("rose 2.27% to 4.48 yuan"), 5u);
    EXPECT_EQ(text::count_words("-- ... !!"), 0u);  // punctuation-only tokens
}

TEST(TextTest, PhraseMatchingIsWholeWordAndCaseInsensitive) {
    EXPECT_TRUE(text::contains_phrase("Investors should Buy now", "buy"));
    EXPECT_FALSE(text::contains_phrase("the price holds above", "hold"));
    EXPECT_FALSE(text::contains_phrase("active holding by leaders", "hold"));
    EXPECT_TRUE(text::contains_phrase("ACCORDING TO the data", "according to"));
    EXPECT_FALSE(text::contains_phrase("unaccording to", "according to"));

    const auto hits = text::find_phrase("buy low, buy high", "buy");
    ASSERT_EQ(hits.size(), 2u);
    EXPECT_EQ(hits[0].position, 0u);
    EXPECT_EQ(hits[1].position, 9u);
    EXPECT_EQ(hits[0].phrase, "buy");
}

TEST(TextTest, SplitSentences) {
    const auto s = text::split_sentences(
        "The five-day cumulative DDX stands at -14.865, with the latest at -2.6. "
        "Margin balance is flat; holders are steady. New line\nitem here");
    ASSERT_EQ(s.size(), 5u);
    EXPECT_NE(s[0].find("-14.865"), std::string::npos);
    EXPECT_NE(s[0].find("-2.6"), std::string::npos);  // decimal point did not split
    EXPECT_NE(s[1].find("Margin"), std::string::npos);
    EXPECT_EQ(s[3], "New line");
}

TEST(TextTest, NumericLiteralDetection) {
    EXPECT_TRUE(text::contains_numeric_literal("closed at 4.48 yuan"));
    EXPECT_TRUE(text::contains_numeric_literal("a turnover rate of 17.65%"));
    EXPECT_TRUE(text::contains_numeric_literal("DDX of -14.865"));
    EXPECT_TRUE(text::contains_numeric_literal("on 2024-10-16"));
    EXPECT_FALSE(text::contains_numeric_literal("the MA5 and RSI6 readings"));
    EXPECT_FALSE(text::contains_numeric_literal("no figures at all"));
}

TEST(TextTest, ExtractNumericTokens) {
    const auto tokens =
        text::extract_numeric_tokens("rose 2.27% to 4.48 yuan; MA5 flat, DDX -14.865");
    EXPECT_EQ(tokens, (std::vector<std::string>{"2.27%", "4.48", "-14.865"}));
}

TEST(TextTest, TruncateWords) {
    EXPECT_EQ(text::truncate_words("one two three", 2), "one two");
    EXPECT_EQ(text::truncate_words("one two three", 5), "one two three");
    EXPECT_EQ(text::truncate_words("a  spaced   text", 2), "a  spaced");
    EXPECT_EQ(text::count_words(text::truncate_words("w x y z v u t s", 3)), 3u);
}

TEST(TextTest, TrimAndLower) {
    EXPECT_EQ(text::trim("  padded \n"), "padded");
    EXPECT_EQ(text::trim(""), "");
    EXPECT_EQ(text::to_lower("MiXeD Case"), "mixed case");
}

TEST(CsvTest, SplitLineHandlesQuoting) {
    EXPECT_EQ(csv::split_line("a,b,c"), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(csv::split_line(R"(a,"b,c",d)"), (std::vector<std::string>{"a", "b,c", "d"}));
    EXPECT_EQ(csv::split_line(R"("say ""hi""",x)"),
              (std::vector<std::string>{"say \"hi\"", "x"}));
    EXPECT_EQ(csv::split_line("a,,c"), (std::vector<std::string>{"a", "", "c"}));
    EXPECT_THROW(csv::split_line(R"("unterminated)", 7), ParseError);
}

TEST(CsvTest, EscapeJoinRoundTrip) {
    const std::vector<std::string> fields = {"plain", "with,comma", "with \"quote\"", ""};
    EXPECT_EQ(csv::split_line(csv::join(fields)), fields);
    EXPECT_EQ(csv::escape("plain"), "plain");
    EXPECT_EQ(csv::escape("a,b"), "\"a,b\"");
}

TEST(CsvTest, ReadFileValidatesHeaderAndArity) {
    testsupport::TempDir dir;
    const auto path = dir.file("t.csv");

    testsupport::write_file(path, "a,b\n1,2\n\n3,4\n");
    const auto rows = csv::read_file(path, {"a", "b"});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].fields, (std::vector<std::string>{"1", "2"}));
    EXPECT_EQ(rows[0].line, 2);
    EXPECT_EQ(rows[1].line, 4);  // blank line skipped, numbering preserved

    testsupport::write_file(path, "a,wrong\n1,2\n");
    EXPECT_THROW(csv::read_file(path, {"a", "b"}), ParseError);

    testsupport::write_file(path, "a,b\n1,2,3\n");
    try {
        csv::read_file(path, {"a", "b"});
        FAIL() << "arity mismatch not rejected";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }

    EXPECT_THROW(csv::read_file(dir.file("absent.csv"), {"a"}), ParseError);
}

TEST(CsvTest, FieldParsersNameTheColumn) {
    csv::Row row{{"x", "12.5"}, 9};
    EXPECT_DOUBLE_EQ(csv::parse_double(row, 1, "price"), 12.5);
    try {
        csv::parse_double(row, 0, "price");
        FAIL() << "non-numeric accepted";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("price"), std::string::npos);
        EXPECT_EQ(e.line(), 9);
    }
    EXPECT_EQ(csv::parse_int({{"42"}, 1}, 0, "count"), 42);
    EXPECT_THROW(csv::parse_int({{"4.2"}, 1}, 0, "count"), ParseError);
}

TEST(TomlTest, ParsesConfigSubset) {
    const auto doc = toml::Document::parse(
        "# run configuration\n"
        "[store]\n"
        "dir = \"data/sample_store\"  # inline comment\n"
        "[backend]\n"
        "endpoint = \"http://localhost:9000/v1\"\n"
        "max_output_tokens = 8000\n"
        "temperature = 0.5\n"
        "[synthesizer]\n"
        "plan_narrowing = true\n"
        "keywords = [\"a\", \"b\"]\n");
    EXPECT_EQ(doc.get_string("store", "dir"), "data/sample_store");
    EXPECT_EQ(doc.get_int("backend", "max_output_tokens"), 8000);
    EXPECT_DOUBLE_EQ(*doc.get_double("backend", "temperature"), 0.5);
    EXPECT_EQ(doc.get_bool("synthesizer", "plan_narrowing"), true);
    EXPECT_EQ(doc.get_string_array("synthesizer", "keywords"),
              (std::vector<std::string>{"a", "b"}));
    EXPECT_FALSE(doc.get_string("store", "missing").has_value());
    EXPECT_FALSE(doc.get_string("absent", "dir").has_value());
    EXPECT_TRUE(doc.has("backend", "endpoint"));
    EXPECT_EQ(doc.section_names().size(), 3u);
}

TEST(TomlTest, IntIsReadableAsDouble) {
    const auto doc = toml::Document::parse("[s]\nv = 3\n");
    EXPECT_DOUBLE_EQ(*doc.get_double("s", "v"), 3.0);
    EXPECT_FALSE(doc.get_string("s", "v").has_value());  // no cross-type reads
}

TEST(TomlTest, RejectsMalformedLines) {
    EXPECT_THROW(toml::Document::parse("[unterminated\n"), ParseError);
    EXPECT_THROW(toml::Document::parse("[s]\nkey with no equals\n"), ParseError);
    try {
        toml::Document::parse("[s]\nok = 1\nbad line\n");
        FAIL() << "malformed line accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}
