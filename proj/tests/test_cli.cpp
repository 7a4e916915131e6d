// SPDX-License-Identifier: Apache-2.0
//
// madoa: movable-antenna array design and 2D DOA estimation
// Copyright (C) 2026 The madoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = madoa::cli::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string &s)
{
    int n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

const std::string kDefaults = std::string(MADOA_SOURCE_DIR) + "/configs/paper.defaults";

fs::path write_temp(const std::string &name, const std::string &text)
{
    const auto p = fs::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST(Cli, LayoutEmitsCsv)
{
    const auto r = run({"layout", "--family", "pma", "--side", "8", "--dmin", "0.5", "--n", "36"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("x_lambda,y_lambda\n", 0), 0u);
    EXPECT_EQ(count_lines(r.out), 37);

    const auto ura = run({"layout", "--family", "ura", "--rows", "2", "--cols", "3"});
    EXPECT_EQ(ura.code, 0);
    EXPECT_EQ(count_lines(ura.out), 7);
}

TEST(Cli, LayoutErrors)
{
    EXPECT_EQ(run({"layout", "--family", "hex"}).code, 2);
    EXPECT_EQ(run({"layout", "--family", "pma", "--side", "8.2"}).code, 2);
    EXPECT_EQ(run({"layout", "--family", "pma", "--n", "500"}).code, 2);
}

TEST(Cli, CrbTableHasTriangleRowFirstAndSmallest)
{
    const auto r = run({"crb", "--config", kDefaults});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream is(r.out);
    std::string header, line;
    std::getline(is, header);
    EXPECT_NE(header.find("crb_theta_cos"), std::string::npos);
    std::vector<std::string> rows;
    while (std::getline(is, line))
        rows.push_back(line);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].rfind("PMA,", 0), 0u);
}

TEST(Cli, MissingConfigIsExitTwo)
{
    const auto r = run({"crb", "--config", "/nonexistent.ini"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("nonexistent"), std::string::npos);
    EXPECT_EQ(run({"spectrum"}).code, 2);
}

TEST(Cli, UnknownFlagsAndKeysAreExitTwo)
{
    EXPECT_EQ(run({"crb", "--config", kDefaults, "--bogus"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const auto bad = write_temp("madoa_cli_bad.ini", "[array]\nwidth = 3\n");
    const auto r = run({"crb", "--config", bad.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("array.width"), std::string::npos);
    EXPECT_EQ(run({"rmse-snr", "--config", kDefaults, "--trials", "0"}).code, 2);
    EXPECT_EQ(run({"rmse-snr", "--config", kDefaults, "--family", "pma,hex"}).code, 2);
    EXPECT_EQ(run({"rmse-snr", "--config", kDefaults, "--snr", "ten"}).code, 2);
}

TEST(Cli, HelpDocumentsEveryFlag)
{
    const auto top = run({"--help"});
    EXPECT_EQ(top.code, 0);
    for (const char *sub : {"layout", "crb", "spectrum", "rmse-snr", "psr", "rmse-area"})
        EXPECT_NE(top.out.find(sub), std::string::npos) << sub;

    const auto sub = run({"rmse-snr", "--help"});
    EXPECT_EQ(sub.code, 0);
    for (const char *flag : {"--config", "--trials", "--seed", "--out", "--snr", "--family", "--threads"})
        EXPECT_NE(sub.out.find(flag), std::string::npos) << flag;
}

TEST(Cli, SweepWritesCsvWithOverrides)
{
    const auto dir = fs::temp_directory_path() / "madoa_cli_sweep";
    fs::remove_all(dir);
    const auto cfg = write_temp("madoa_cli_quick.ini", "[rmse_snr]\ngrid_step = 0.02\n");
    const auto r = run({"rmse-snr", "--config", cfg.string(), "--trials", "2", "--seed", "5", "--snr", "10,20",
                        "--family", "pma,ura", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(dir / "rmse_snr.csv");
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(count_lines(ss.str()), 5);
    EXPECT_TRUE(fs::exists(dir / "rmse_snr.meta.json"));
    fs::remove_all(dir);
}

TEST(Cli, ThreadEnvironmentCapDoesNotChangeOutput)
{
    const auto cfg = write_temp("madoa_cli_env.ini", "[rmse_snr]\ngrid_step = 0.02\ntrials = 6\nsnr_db = 10\n");
    std::string outputs[2];
    for (int i = 0; i < 2; ++i) {
        ::setenv("MA_DOA_THREADS", i == 0 ? "1" : "4", 1);
        const auto dir = fs::temp_directory_path() / ("madoa_cli_env" + std::to_string(i));
        fs::remove_all(dir);
        ASSERT_EQ(run({"rmse-snr", "--config", cfg.string(), "--threads", "4", "--out", dir.string()}).code, 0);
        std::ifstream in(dir / "rmse_snr.csv");
        std::stringstream ss;
        ss << in.rdbuf();
        outputs[i] = ss.str();
        fs::remove_all(dir);
    }
    ::unsetenv("MA_DOA_THREADS");
    EXPECT_EQ(outputs[0], outputs[1]);
}
