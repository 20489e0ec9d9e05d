#include <catch2/catch_amalgamated.hpp>

#include <simopt/equiv.hpp>

#include "oracles.hpp"

using namespace simopt;

TEST_CASE( "buffer and double inverter are equivalent" )
{
  auto const buf = parse_blif( std::string( ".model b\n.inputs a\n.outputs y\n.names a y\n1 1\n.end\n" ) );
  auto const dinv = parse_blif( std::string(
      ".model d\n.inputs a\n.outputs y\n.names a t\n0 1\n.names t y\n0 1\n.end\n" ) );
  auto const r = exhaustive_equiv( buf, dinv );
  CHECK( r.verdict == equiv_verdict::equivalent );
  CHECK( r.coverage == 2 );
}

TEST_CASE( "AND2 and OR2 mismatch on the first differing assignment" )
{
  auto const and2 = parse_blif( std::string( ".model x\n.inputs a b\n.outputs y\n.names a b y\n11 1\n.end\n" ) );
  auto const or2 = parse_blif( std::string(
      ".model x\n.inputs a b\n.outputs y\n.names a b y\n1- 1\n-1 1\n.end\n" ) );
  auto const r = exhaustive_equiv( and2, or2 );
  REQUIRE( r.verdict == equiv_verdict::mismatch );
  REQUIRE( r.cex.has_value() );
  /* ascending minterm order: minterm 1 is a=1, b=0 */
  REQUIRE( r.cex->inputs.size() == 2 );
  CHECK( r.cex->inputs[0] == std::pair<std::string, uint8_t>{ "a", 1 } );
  CHECK( r.cex->inputs[1] == std::pair<std::string, uint8_t>{ "b", 0 } );
  CHECK( format_counterexample( *r.cex ) == "a=1 b=0" );
}

TEST_CASE( "every netlist is equivalent to itself" )
{
  for ( auto const* name : { "adder8", "alu_slice", "mult4" } )
  {
    auto const nl = oracles::load_benchmark( name );
    CHECK( exhaustive_equiv( nl, nl ).verdict == equiv_verdict::equivalent );
  }
}

TEST_CASE( "counterexamples replay to a real output difference" )
{
  auto const and2 = parse_blif( std::string( ".model x\n.inputs a b\n.outputs y\n.names a b y\n11 1\n.end\n" ) );
  auto const or2 = parse_blif( std::string(
      ".model x\n.inputs a b\n.outputs y\n.names a b y\n1- 1\n-1 1\n.end\n" ) );
  auto const r = exhaustive_equiv( and2, or2 );
  REQUIRE( r.cex.has_value() );

  std::vector<std::string> names;
  std::vector<waveform> waves;
  for ( auto const& [name, bit] : r.cex->inputs )
  {
    names.push_back( name );
    waves.push_back( waveform::constant( bit ) );
  }
  auto const stim = make_stimulus( names, waves, 2, 0 );
  simulator sa( and2 ), sb( or2 );
  sa.reset( stim );
  sb.reset( stim );
  CHECK( sa.value( *and2.find_net( "y" ) ) != sb.value( *or2.find_net( "y" ) ) );
}

TEST_CASE( "exhaustive check agrees with truth-table comparison on single cells" )
{
  std::mt19937_64 rng( 99 );
  auto const table = oracles::random_table( rng, 4 );
  auto make_single = [&]( truth_table const& tt ) {
    netlist nl( "single" );
    std::vector<net_id> ins;
    for ( int i = 0; i < 4; ++i )
    {
      ins.push_back( nl.add_input( "i" + std::to_string( i ) ) );
    }
    auto const y = nl.ensure_net( "y" );
    nl.add_cell( ins, y, tt );
    nl.add_output( y );
    return nl;
  };
  auto flipped = table;
  flipped.set_bit( 5, !flipped.get_bit( 5 ) );
  CHECK( exhaustive_equiv( make_single( table ), make_single( table ) ).verdict ==
         equiv_verdict::equivalent );
  auto const r = exhaustive_equiv( make_single( table ), make_single( flipped ) );
  REQUIRE( r.verdict == equiv_verdict::mismatch );
  /* minterm 5 = i0, i2 set */
  CHECK( r.cex->inputs[0].second == 1 );
  CHECK( r.cex->inputs[1].second == 0 );
  CHECK( r.cex->inputs[2].second == 1 );
  CHECK( r.cex->inputs[3].second == 0 );
}

TEST_CASE( "exhaustive preconditions" )
{
  auto const seq = oracles::load_benchmark( "counter3" );
  CHECK_THROWS_AS( exhaustive_equiv( seq, seq ), validation_error );

  auto const a = parse_blif( std::string( ".model a\n.inputs p\n.outputs y\n.names p y\n1 1\n.end\n" ) );
  auto const b = parse_blif( std::string( ".model b\n.inputs q\n.outputs y\n.names q y\n1 1\n.end\n" ) );
  CHECK_THROWS_AS( exhaustive_equiv( a, b ), validation_error );

  netlist wide( "wide" );
  std::vector<net_id> ins;
  for ( int i = 0; i < 17; ++i )
  {
    ins.push_back( wide.add_input( "i" + std::to_string( i ) ) );
  }
  /* 17 inputs exceeds the exhaustive cap even though each cell is small */
  auto const t = wide.ensure_net( "t" );
  wide.add_cell( { ins[0], ins[1] }, t, truth_table::from_hex( 2, "8" ) );
  wide.add_output( t );
  for ( int i = 2; i < 17; ++i )
  {
    auto const y = wide.ensure_net( "y" + std::to_string( i ) );
    wide.add_cell( { ins[i] }, y, truth_table::from_hex( 1, "2" ) );
    wide.add_output( y );
  }
  CHECK_THROWS_AS( exhaustive_equiv( wide, wide ), validation_error );
}

TEST_CASE( "lockstep flags an inverted next state at cycle 1" )
{
  auto const counter = parse_blif( std::string(
      ".model c\n.outputs q\n.latch d q 0\n.names q d\n0 1\n.end\n" ) );
  auto const stuck = parse_blif( std::string(
      ".model c\n.outputs q\n.latch d q 0\n.names q d\n1 1\n.end\n" ) );
  auto const stim = make_stimulus( {}, {}, 100, 0 );
  auto const r = lockstep_equiv( counter, stuck, stim );
  REQUIRE( r.verdict == equiv_verdict::mismatch );
  CHECK( r.cex->cycle == 1u );
  CHECK( r.coverage == 1 );
}

TEST_CASE( "lockstep counterexamples replay to the reported divergence" )
{
  auto const counter = parse_blif( std::string(
      ".model c\n.inputs en\n.outputs q\n.latch d q 0\n.names en q d\n10 1\n11 1\n01 1\n.end\n" ) );
  auto const stuck = parse_blif( std::string(
      ".model c\n.inputs en\n.outputs q\n.latch d q 0\n.names en q d\n01 1\n.end\n" ) );
  auto const stim = generate_stimulus( counter, 64, 3 );
  auto const r = lockstep_equiv( counter, stuck, stim );
  REQUIRE( r.verdict == equiv_verdict::mismatch );
  REQUIRE( r.cex.has_value() );
  REQUIRE( r.cex->cycle.has_value() );

  simulator sa( counter ), sb( stuck );
  sa.reset( stim );
  sb.reset( stim );
  for ( uint32_t c = 0; c < *r.cex->cycle; ++c )
  {
    REQUIRE( sa.step() );
    REQUIRE( sb.step() );
  }
  CHECK( sa.value( *counter.find_net( "q" ) ) != sb.value( *stuck.find_net( "q" ) ) );
}

TEST_CASE( "lockstep over a zero-cycle stimulus is vacuous" )
{
  auto const nl = oracles::load_benchmark( "counter3" );
  auto const r = lockstep_equiv( nl, nl, make_stimulus( {}, {}, 0, 0 ) );
  CHECK( r.verdict == equiv_verdict::inconclusive );
  CHECK( r.coverage == 0 );
}

TEST_CASE( "lockstep never claims equivalence" )
{
  auto const nl = oracles::load_benchmark( "updown4" );
  auto const stim = generate_stimulus( nl, 10000, 4 );
  auto const r = lockstep_equiv( nl, nl, stim );
  CHECK( r.verdict == equiv_verdict::inconclusive );
  CHECK( r.coverage == 10000 );
}

TEST_CASE( "optimized benchmark passes lockstep over ten thousand cycles" )
{
  auto const nl = oracles::load_benchmark( "fifo_ctrl" );
  auto const prof = simulate( nl, generate_stimulus( nl, 2048, 1 ) );
  auto const [out, report] = run_pass( nl, prof, opt_config{} );
  REQUIRE_FALSE( report.applied.empty() );
  auto const r = lockstep_equiv( nl, out, generate_stimulus( nl, 10000, 2 ) );
  CHECK( r.verdict == equiv_verdict::inconclusive );
  CHECK( r.coverage == 10000 );
}
