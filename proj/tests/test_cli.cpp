#include <catch2/catch_amalgamated.hpp>

#include <simopt/blif.hpp>
#include <simopt/simulate.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{

std::string const cli = SIMOPT_CLI_PATH;
std::string const bench = SIMOPT_BENCH_DIR;
std::string const configs = SIMOPT_CONFIG_DIR;

int run( std::string const& args )
{
  auto const status = std::system( ( cli + " " + args + " >/dev/null 2>&1" ).c_str() );
  REQUIRE( WIFEXITED( status ) );
  return WEXITSTATUS( status );
}

std::string slurp( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  REQUIRE( in.good() );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct workdir
{
  fs::path path;
  explicit workdir( std::string const& name ) : path( fs::path( "cli_work" ) / name )
  {
    fs::remove_all( path );
    fs::create_directories( path );
  }
  std::string file( std::string const& name ) const { return ( path / name ).string(); }
};

} /* namespace */

TEST_CASE( "sim writes a profile with the requested cycle count" )
{
  workdir wd( "sim" );
  auto const prof = wd.file( "counter3.prof" );
  CHECK( run( "sim --blif " + bench + "/counter3.blif --cycles 512 --seed 1 -o " + prof ) == 0 );
  auto const text = slurp( prof );
  CHECK( text.rfind( "simopt-profile v1 cycles=512", 0 ) == 0 );
  auto const profile = simopt::read_profile( text );
  CHECK( profile.counter_of( "q0" ) == 512 );
}

TEST_CASE( "sim on a missing file exits 1" )
{
  CHECK( run( "sim --blif does_not_exist.blif --cycles 16 -o /dev/null" ) == 1 );
}

TEST_CASE( "cycles below 2 is a usage error" )
{
  CHECK( run( "sim --blif " + bench + "/counter3.blif --cycles 1 -o /dev/null" ) == 64 );
}

TEST_CASE( "opt produces a parsable netlist that passes check" )
{
  workdir wd( "opt" );
  auto const prof = wd.file( "c3.prof" );
  auto const out = wd.file( "c3.opt.blif" );
  auto const report = wd.file( "c3.pass.txt" );
  REQUIRE( run( "sim --blif " + bench + "/counter3.blif --cycles 512 --seed 1 -o " + prof ) == 0 );
  CHECK( run( "opt --blif " + bench + "/counter3.blif --profile " + prof +
              " --cycles 512 --seed 1 -o " + out + " --report " + report ) == 0 );
  std::ifstream parsed( out );
  CHECK_NOTHROW( simopt::parse_blif( parsed ) );
  CHECK( run( "check --blif " + bench + "/counter3.blif --against " + out + " --cycles 512" ) == 0 );
}

TEST_CASE( "opt with no transforms reproduces the input netlist" )
{
  workdir wd( "identity" );
  auto const prof = wd.file( "ud.prof" );
  auto const out = wd.file( "ud.opt.blif" );
  REQUIRE( run( "sim --blif " + bench + "/updown4.blif --cycles 256 --seed 1 -o " + prof ) == 0 );
  REQUIRE( run( "opt --blif " + bench + "/updown4.blif --profile " + prof +
                " --cycles 256 --seed 1 --transforms none -o " + out + " --report " +
                wd.file( "ud.pass.txt" ) ) == 0 );
  CHECK( slurp( out ) == slurp( bench + "/updown4.blif" ) );
}

TEST_CASE( "opt refuses a mismatched profile with exit 3" )
{
  workdir wd( "mismatch" );
  auto const prof = wd.file( "adder8.prof" );
  REQUIRE( run( "sim --blif " + bench + "/adder8.blif --cycles 64 --seed 1 -o " + prof ) == 0 );
  CHECK( run( "opt --blif " + bench + "/counter3.blif --profile " + prof + " -o " +
              wd.file( "x.blif" ) + " --report " + wd.file( "x.txt" ) ) == 3 );
}

TEST_CASE( "opt --strict fails on a stale profile digest" )
{
  workdir wd( "stale" );
  auto const prof = wd.file( "ud.prof" );
  REQUIRE( run( "sim --blif " + bench + "/updown4.blif --cycles 512 --seed 1 -o " + prof ) == 0 );
  /* a different seed realizes different input tracks, so the digest moves */
  CHECK( run( "opt --blif " + bench + "/updown4.blif --profile " + prof +
              " --cycles 512 --seed 2 --strict -o " + wd.file( "o.blif" ) + " --report " +
              wd.file( "r.txt" ) ) == 3 );
  CHECK( run( "opt --blif " + bench + "/updown4.blif --profile " + prof +
              " --cycles 512 --seed 2 -o " + wd.file( "o.blif" ) + " --report " +
              wd.file( "r.txt" ) ) == 0 );
}

TEST_CASE( "power compares baseline and optimized netlists" )
{
  workdir wd( "power" );
  auto const prof = wd.file( "fifo.prof" );
  auto const opt = wd.file( "fifo.opt.blif" );
  auto const rpt = wd.file( "fifo.power.txt" );
  REQUIRE( run( "sim --blif " + bench + "/fifo_ctrl.blif --cycles 1024 --seed 1 -o " + prof ) == 0 );
  REQUIRE( run( "opt --blif " + bench + "/fifo_ctrl.blif --profile " + prof +
                " --cycles 1024 --seed 1 -o " + opt + " --report " + wd.file( "fifo.pass.txt" ) ) ==
           0 );
  CHECK( run( "power --blif " + bench + "/fifo_ctrl.blif --optimized " + opt +
              " --cycles 1024 --seed 1 -o " + rpt ) == 0 );
  auto const text = slurp( rpt );
  CHECK( text.rfind( "name, power_W, area_luts, dP_pct, dA_pct\n", 0 ) == 0 );
  CHECK( std::count( text.begin(), text.end(), '\n' ) == 3 ); /* header + two rows */
}

TEST_CASE( "input-wave overrides replace the reset heuristic" )
{
  workdir wd( "waves" );
  auto const blif = wd.file( "r.blif" );
  std::ofstream( blif ) << ".model r\n.inputs rst d\n.outputs q\n.names rst d q\n01 1\n.end\n";
  auto const prof = wd.file( "r.prof" );
  REQUIRE( run( "sim --blif " + blif + " --cycles 64 --seed 1 -o " + prof ) == 0 );
  CHECK( simopt::read_profile( slurp( prof ) ).counter_of( "rst" ) == 0 );
  REQUIRE( run( "sim --blif " + blif + " --cycles 64 --seed 1 --input-wave rst=toggle:1 -o " +
                prof ) == 0 );
  CHECK( simopt::read_profile( slurp( prof ) ).counter_of( "rst" ) == 63 );
  CHECK( run( "sim --blif " + blif + " --cycles 64 --input-wave nosuch=const0 -o " + prof ) == 64 );
}

TEST_CASE( "zero baseline power exits 4" )
{
  workdir wd( "zerop" );
  auto const blif = wd.file( "const.blif" );
  std::ofstream( blif ) << ".model c\n.outputs y\n.names y\n1\n.end\n";
  CHECK( run( "power --blif " + blif + " --cycles 64 --seed 1 -o " + wd.file( "p.txt" ) ) == 4 );
}

TEST_CASE( "check picks the mode from the design class" )
{
  workdir wd( "dispatch" );
  auto const out = wd.file( "out.txt" );
  auto status = std::system( ( cli + " check --blif " + bench + "/adder8.blif --against " + bench +
                               "/adder8.blif > " + out + " 2>&1" )
                                 .c_str() );
  REQUIRE( WIFEXITED( status ) );
  CHECK( WEXITSTATUS( status ) == 0 );
  CHECK_THAT( slurp( out ), Catch::Matchers::ContainsSubstring( "exhaustive" ) );

  status = std::system( ( cli + " check --blif " + bench + "/counter3.blif --against " + bench +
                          "/counter3.blif --cycles 64 > " + out + " 2>&1" )
                            .c_str() );
  REQUIRE( WIFEXITED( status ) );
  CHECK( WEXITSTATUS( status ) == 0 );
  CHECK_THAT( slurp( out ), Catch::Matchers::ContainsSubstring( "lockstep" ) );
  CHECK_THAT( slurp( out ), Catch::Matchers::ContainsSubstring( "inconclusive" ) );
}

TEST_CASE( "check reports a mismatch with exit 5" )
{
  workdir wd( "miter" );
  auto const a = wd.file( "and2.blif" );
  auto const b = wd.file( "or2.blif" );
  std::ofstream( a ) << ".model x\n.inputs a b\n.outputs y\n.names a b y\n11 1\n.end\n";
  std::ofstream( b ) << ".model x\n.inputs a b\n.outputs y\n.names a b y\n1- 1\n-1 1\n.end\n";
  CHECK( run( "check --blif " + a + " --against " + b ) == 5 );
}

TEST_CASE( "two all runs with one seed are byte-identical" )
{
  workdir wd( "repro" );
  auto const base_args = std::string( " --blif " ) + bench + "/updown4.blif --blif " + bench +
                         "/alu_slice.blif --cycles 512 --seed 7";
  REQUIRE( run( "all --out-dir " + wd.file( "r1" ) + base_args ) == 0 );
  REQUIRE( run( "all --out-dir " + wd.file( "r2" ) + base_args + " --jobs 2" ) == 0 );
  for ( auto const& entry : fs::directory_iterator( wd.file( "r1" ) ) )
  {
    auto const name = entry.path().filename().string();
    INFO( name );
    CHECK( slurp( entry.path().string() ) == slurp( wd.file( "r2" ) + "/" + name ) );
  }
  CHECK_FALSE( fs::is_empty( wd.file( "r1" ) ) );
}

TEST_CASE( "the shipped low-power config drives the pipeline" )
{
  workdir wd( "config" );
  CHECK( run( "all --config " + configs + "/lowpower.cfg --blif " + bench +
              "/fifo_ctrl.blif --out-dir " + wd.file( "out" ) ) == 0 );
  auto const pass = slurp( wd.file( "out" ) + "/fifo_ctrl.pass.txt" );
  CHECK_THAT( pass, Catch::Matchers::ContainsSubstring( "driver_duplicate" ) );
  CHECK_THAT( pass, !Catch::Matchers::ContainsSubstring( "shannon_split" ) );
  auto const power = slurp( wd.file( "out" ) + "/fifo_ctrl.power.txt" );
  CHECK_THAT( power, Catch::Matchers::ContainsSubstring( "name, power_W" ) );
}
