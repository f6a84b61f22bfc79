#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pprod/errors.hpp"
#include "pprod/report_io.hpp"

using namespace pprod;

TEST(ReportIo, FormatReal) {
    EXPECT_EQ(io::format_real(2018.181818181818), "2018.18181818");
    EXPECT_EQ(io::format_real(0.905), "0.905");
    EXPECT_EQ(io::format_real(1e-20), "1e-20");
    EXPECT_EQ(io::format_real(NAN), "nan");
    EXPECT_EQ(io::format_real(-INFINITY), "-inf");
    EXPECT_TRUE(io::real(NAN).is_null());
    EXPECT_DOUBLE_EQ(io::real(1.0 / 3.0).get<double>(), 0.333333333333);
}

TEST(ReportIo, ParseFormat) {
    EXPECT_EQ(io::parse_format("csv"), io::Format::Csv);
    EXPECT_EQ(io::parse_format("tsv"), io::Format::Tsv);
    EXPECT_EQ(io::parse_format("json"), io::Format::Json);
    EXPECT_THROW(io::parse_format("xml"), DomainError);
}

TEST(ReportIo, CsvQuotingAndHeader) {
    std::vector<io::Record> rows;
    rows.push_back({{"name", "a,b"}, {"v", 1.5}, {"ok", true}});
    rows.push_back({{"name", "say \"hi\""}, {"v", nullptr}, {"ok", false}});
    std::ostringstream csv;
    io::emit_rows(csv, io::Format::Csv, rows);
    EXPECT_EQ(csv.str(), "name,v,ok\n\"a,b\",1.5,true\n\"say \"\"hi\"\"\",,false\n");

    std::ostringstream tsv;
    io::emit_rows(tsv, io::Format::Tsv, rows);
    EXPECT_EQ(tsv.str(), "name\tv\tok\na,b\t1.5\ttrue\nsay \"hi\"\t\tfalse\n");
}

TEST(ReportIo, JsonLines) {
    std::vector<io::Record> rows{{{"a", 1}}, {{"a", 2}}};
    std::ostringstream out;
    io::emit_rows(out, io::Format::Json, rows);
    EXPECT_EQ(out.str(), "{\"a\":1}\n{\"a\":2}\n");
}
