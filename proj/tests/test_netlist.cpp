#include <catch2/catch_amalgamated.hpp>

#include <simopt/blif.hpp>
#include <simopt/netlist.hpp>

#include "oracles.hpp"

using namespace simopt;

namespace
{

netlist make_counter3()
{
  netlist nl( "counter3" );
  auto const q0 = nl.ensure_net( "q0" ), q1 = nl.ensure_net( "q1" ), q2 = nl.ensure_net( "q2" );
  auto const d0 = nl.ensure_net( "d0" ), d1 = nl.ensure_net( "d1" ), d2 = nl.ensure_net( "d2" );
  auto const t2 = nl.ensure_net( "t2" );
  nl.add_latch( d0, q0, latch_init::zero );
  nl.add_latch( d1, q1, latch_init::zero );
  nl.add_latch( d2, q2, latch_init::zero );
  nl.add_cell( { q0 }, d0, truth_table::from_hex( 1, "1" ) );
  nl.add_cell( { q0, q1 }, d1, truth_table::from_hex( 2, "6" ) );
  nl.add_cell( { q0, q1 }, t2, truth_table::from_hex( 2, "8" ) );
  nl.add_cell( { t2, q2 }, d2, truth_table::from_hex( 2, "6" ) );
  nl.add_output( q0 );
  nl.add_output( q1 );
  nl.add_output( q2 );
  return nl;
}

} /* namespace */

TEST_CASE( "parse a one-cell buffer" )
{
  auto const nl = parse_blif( std::string( ".model buf\n.inputs a\n.outputs y\n.names a y\n1 1\n.end\n" ) );
  CHECK( nl.name() == "buf" );
  CHECK( nl.num_cells() == 1 );
  CHECK( nl.cell_at( 0 ).function == truth_table::from_minterms( 1, { 1 } ) );
}

TEST_CASE( "AND cover is the single row 11" )
{
  auto const nl = parse_blif( std::string( ".model m\n.inputs a b\n.outputs y\n.names a b y\n11 1\n.end\n" ) );
  CHECK( nl.cell_at( 0 ).function == truth_table::from_minterms( 2, { 3 } ) );
}

TEST_CASE( "don't-care rows expand to minterms" )
{
  auto const nl = parse_blif( std::string( ".model m\n.inputs a b\n.outputs y\n.names a b y\n1- 1\n.end\n" ) );
  CHECK( nl.cell_at( 0 ).function == truth_table::from_minterms( 2, { 1, 3 } ) );
}

TEST_CASE( "two .names blocks for one net is a multiple-driver error" )
{
  std::string const text = ".model m\n.inputs a b\n.outputs y\n"
                           ".names a y\n1 1\n.names b y\n1 1\n.end\n";
  CHECK_THROWS_WITH( parse_blif( text ), Catch::Matchers::ContainsSubstring( "multiple drivers" ) );
}

TEST_CASE( "cell arity above 16 is rejected" )
{
  std::string names = ".names";
  std::string inputs = ".inputs";
  std::string row;
  for ( int i = 0; i < 17; ++i )
  {
    names += " x" + std::to_string( i );
    inputs += " x" + std::to_string( i );
    row += '1';
  }
  auto const text = ".model m\n" + inputs + "\n.outputs y\n" + names + " y\n" + row + " 1\n.end\n";
  CHECK_THROWS_WITH( parse_blif( text ), Catch::Matchers::ContainsSubstring( "16" ) );
}

TEST_CASE( "combinational cycles are rejected" )
{
  std::string const text = ".model m\n.outputs y\n"
                           ".names a y\n1 1\n.names y a\n1 1\n.end\n";
  CHECK_THROWS_WITH( parse_blif( text ), Catch::Matchers::ContainsSubstring( "cycle" ) );
}

TEST_CASE( "reading an undriven net is an error" )
{
  std::string const text = ".model m\n.outputs y\n.names a y\n1 1\n.end\n";
  CHECK_THROWS_WITH( parse_blif( text ), Catch::Matchers::ContainsSubstring( "no driver" ) );
}

TEST_CASE( "syntax errors report line and column" )
{
  std::string const text = ".model m\n.inputs a b\n.outputs y\n.names a b y\n1x 1\n.end\n";
  try
  {
    parse_blif( text );
    FAIL( "expected parse_error" );
  }
  catch ( parse_error const& e )
  {
    CHECK( e.line() == 5 );
    CHECK( e.column() == 2 );
    CHECK_THAT( e.what(), Catch::Matchers::ContainsSubstring( "line 5, col 2" ) );
  }
}

TEST_CASE( "assorted malformed documents" )
{
  CHECK_THROWS_AS( parse_blif( std::string( ".model a\n.model b\n.end\n" ) ), parse_error );
  CHECK_THROWS_AS( parse_blif( std::string( ".model a\n.end\n.names x y\n" ) ), parse_error );
  CHECK_THROWS_AS( parse_blif( std::string( ".model a\n.frobnicate\n.end\n" ) ), parse_error );
  CHECK_THROWS_AS( parse_blif( std::string( ".model a\n.inputs x\n.names x y\n11 1\n.end\n" ) ),
                   parse_error );
  CHECK_THROWS_AS( parse_blif( std::string( ".model a\n.inputs d\n.latch d q 7\n.end\n" ) ),
                   parse_error );
  CHECK_THROWS_AS(
      parse_blif( std::string( ".model a\n.inputs x\n.names x y\n1 1\n0 1\n1 0\n.end\n" ) ),
      parse_error );
}

TEST_CASE( "constant cells" )
{
  auto const nl =
      parse_blif( std::string( ".model m\n.outputs y z\n.names y\n1\n.names z\n.end\n" ) );
  CHECK( nl.num_cells() == 2 );
  CHECK( nl.cell_at( 0 ).function.get_bit( 0 ) );
  CHECK_FALSE( nl.cell_at( 1 ).function.get_bit( 0 ) );
  CHECK( nl.area_luts() == 0 ); /* constants excluded */
  CHECK_THAT( emit_blif( nl ), Catch::Matchers::ContainsSubstring( ".names y\n1\n" ) );
}

TEST_CASE( "latch directives" )
{
  auto const nl = parse_blif( std::string(
      ".model m\n.inputs d e\n.outputs q r s\n.latch d q re clk 0\n.latch e r 1\n.latch d s\n.end\n" ) );
  REQUIRE( nl.num_latches() == 3 );
  CHECK( nl.latch_at( 0 ).init == latch_init::zero );
  CHECK( nl.latch_at( 1 ).init == latch_init::one );
  CHECK( nl.latch_at( 2 ).init == latch_init::unknown );
}

TEST_CASE( "comments and continuations" )
{
  std::string const text = "# header comment\n.model m # trailing\n.inputs a \\\nb\n"
                           ".outputs y\n.names a b y # and\n11 1\n.end\n";
  auto const nl = parse_blif( text );
  CHECK( nl.inputs().size() == 2 );
  CHECK( nl.cell_at( 0 ).function == truth_table::from_minterms( 2, { 3 } ) );
}

TEST_CASE( "emit/parse round trip of the buffer" )
{
  auto const nl = parse_blif( std::string( ".model buf\n.inputs a\n.outputs y\n.names a y\n1 1\n.end\n" ) );
  auto const again = parse_blif( emit_blif( nl ) );
  CHECK( oracles::same_structure( nl, again ) );
}

TEST_CASE( "emit-parse fixpoint is byte-identical" )
{
  std::string const messy = "# messy input\n.model m\n.inputs a b c\n.outputs y q\n"
                            ".latch y q re clk 1\n.names a b t1\n1- 1\n-1 1\n"
                            ".names t1 c y\n11 1\n00 1\n.end\n";
  auto const once = emit_blif( parse_blif( messy ) );
  auto const twice = emit_blif( parse_blif( once ) );
  CHECK( once == twice );
}

TEST_CASE( "counter3 round-trips with identical structure" )
{
  auto const built = make_counter3();
  auto const reparsed = parse_blif( emit_blif( built ) );
  CHECK( reparsed.num_latches() == 3 );
  CHECK( reparsed.num_cells() == built.num_cells() );
  CHECK( oracles::same_structure( built, reparsed ) );
}

TEST_CASE( "bundled benchmarks parse and round trip" )
{
  for ( auto const* name :
        { "counter3", "updown4", "adder8", "alu_slice", "mult4", "fifo_ctrl" } )
  {
    auto const nl = oracles::load_benchmark( name );
    auto const once = emit_blif( nl );
    auto const twice = emit_blif( parse_blif( once ) );
    CHECK( once == twice );
  }
}

TEST_CASE( "bundled benchmark areas stay at their recorded baselines" )
{
  CHECK( oracles::load_benchmark( "alu_slice" ).area_luts() == 7 );
  CHECK( oracles::load_benchmark( "counter3" ).area_luts() == 4 );
  CHECK( oracles::load_benchmark( "adder8" ).area_luts() == 16 );
}

TEST_CASE( "area_luts counts non-constant cells" )
{
  auto const buf = parse_blif( std::string( ".model b\n.inputs a\n.outputs y\n.names a y\n1 1\n.end\n" ) );
  CHECK( buf.area_luts() == 1 );

  auto const mixed = parse_blif( std::string(
      ".model m\n.inputs a b\n.outputs y z k\n.names a b y\n11 1\n.names a z\n1 1\n.names k\n1\n.end\n" ) );
  CHECK( mixed.area_luts() == 2 );
}

TEST_CASE( "area is invariant under net renaming" )
{
  auto const nl = make_counter3();
  std::string renamed = emit_blif( nl );
  for ( auto const& [from, to] : std::vector<std::pair<std::string, std::string>>{
            { "q0", "na" }, { "q1", "nb" }, { "q2", "nc" }, { "d0", "nd" } } )
  {
    size_t pos = 0;
    while ( ( pos = renamed.find( from, pos ) ) != std::string::npos )
    {
      renamed.replace( pos, from.size(), to );
      pos += to.size();
    }
  }
  CHECK( parse_blif( renamed ).area_luts() == nl.area_luts() );
}

TEST_CASE( "fanout counts distinct sinks" )
{
  auto const nl = parse_blif( std::string(
      ".model m\n.inputs a\n.outputs y t1\n.names a t1\n1 1\n"
      ".names t1 u\n1 1\n.names t1 v\n1 1\n.names t1 w\n1 1\n.names u v w y\n111 1\n.end\n" ) );
  auto const t1 = *nl.find_net( "t1" );
  CHECK( nl.fanout( t1 ) == 4 ); /* three cells + one primary output */
  auto const y = *nl.find_net( "y" );
  CHECK( nl.fanout( y ) == 1 );

  auto const dangling = parse_blif( std::string( ".model m\n.inputs a b\n.outputs y\n.names a y\n1 1\n.end\n" ) );
  CHECK( dangling.fanout( *dangling.find_net( "b" ) ) == 0 );
  CHECK_THROWS_AS( dangling.fanout( 999 ), std::out_of_range );
}

TEST_CASE( "duplication annotations survive the file format" )
{
  auto nl = parse_blif( std::string( ".model m\n.inputs a\n.outputs y\n.names a y\n1 1\n.end\n" ) );
  nl.add_dup_unit( *nl.find_net( "y" ) );
  auto const text = emit_blif( nl );
  CHECK_THAT( text, Catch::Matchers::ContainsSubstring( "# .dup y 1" ) );
  auto const again = parse_blif( text );
  CHECK( again.net( *again.find_net( "y" ) ).dup_units == 1 );
  CHECK( emit_blif( again ) == text );
}

TEST_CASE( "builder rejects invalid cells" )
{
  netlist nl( "m" );
  auto const a = nl.add_input( "a" );
  auto const y = nl.ensure_net( "y" );
  CHECK_THROWS_AS( nl.add_cell( { a }, y, truth_table( 2 ) ), validation_error );
  nl.add_cell( { a }, y, truth_table::from_hex( 1, "2" ) );
  CHECK_THROWS_AS( nl.add_cell( { a }, y, truth_table::from_hex( 1, "2" ) ), validation_error );
  CHECK_THROWS_AS( nl.add_latch( a, y, latch_init::zero ), validation_error );
}
