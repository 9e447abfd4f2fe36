// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/sim/Adversary.h>

#include <array>
#include <random>

using namespace std;

namespace tokenauditor::sim
{

namespace
{

array<char const*, 5> const c_principals = {"owner", "alice", "bob", "carol", "mallory"};
array<char const*, 3> const c_outsiders = {"vault", "sink", "v2"};
array<char const*, 9> const c_forbidden = {
	"selfdestruct", "pause", "unpause", "burnfrom", "mint", "setfee", "migrate", "deprecate", "upgrade"
};

class Generator
{
public:
	Generator(uint64_t _seed, Params const& _defaults): m_random(_seed), m_defaults(_defaults) {}

	Scenario run(unsigned _maxEvents)
	{
		Scenario scenario;
		ScenarioEvent deployEvent;
		deployEvent.op = OpKind::Deploy;
		deployEvent.opName = "deploy";
		deployEvent.principal = "owner";
		deployEvent.amount = uniform(1, 1'000'000'000);
		if (chance(4))
			deployEvent.deployOptions.delay = uniform(1, 1000);
		if (chance(4))
			deployEvent.deployOptions.window = uniform(1, 5000);
		if (chance(4))
			deployEvent.deployOptions.cap = uniform(1, 1'000'000);
		add(scenario, deployEvent);

		unsigned count = static_cast<unsigned>(uniform(1, _maxEvents));
		while (scenario.events.size() < count)
			add(scenario, nextEvent());
		return scenario;
	}

private:
	uint64_t uniform(uint64_t _low, uint64_t _high)
	{
		return uniform_int_distribution<uint64_t>(_low, _high)(m_random);
	}

	bool chance(unsigned _oneIn) { return uniform(1, _oneIn) == 1; }

	template <class T, size_t N>
	T pick(array<T, N> const& _options) { return _options[uniform(0, N - 1)]; }

	string anyone()
	{
		return chance(5) ? string(pick(c_outsiders)) : string(pick(c_principals));
	}

	void add(Scenario& _scenario, ScenarioEvent _event)
	{
		_event.time = nextTime();
		TraceStep result = step(m_state, _event, m_defaults, {});
		m_state = result.after;
		_scenario.events.push_back(move(_event));
	}

	/// Mostly forward, often right at or next to a maturity or window edge.
	Timestamp nextTime()
	{
		Timestamp now = m_state.clock;
		vector<Timestamp> edges;
		for (PendingAction const& action: m_state.pending)
			if (action.status == ActionStatus::Pending)
				edges.push_back(action.executableAt);
		if (m_state.deployed)
			edges.push_back(m_state.windowStart + m_state.params.window);
		switch (uniform(0, 5))
		{
		case 0:
		case 1:
			return now;
		case 2:
			return now + uniform(1, 3600);
		case 3:
		case 4:
			if (!edges.empty())
			{
				Timestamp edge = edges[uniform(0, edges.size() - 1)];
				Timestamp candidate = edge - 1 + uniform(0, 2);
				// Occasionally aim into the past to exercise clock regression.
				if (candidate >= now || chance(10))
					return candidate;
			}
			return now + 1;
		default:
			return now + uniform(1, 2 * m_state.params.delay + 1);
		}
	}

	Amount someAmount(Address const& _holder)
	{
		Amount balance = m_state.balanceOf(_holder);
		switch (uniform(0, 4))
		{
		case 0: return balance;
		case 1: return balance + 1;
		case 2: return 0;
		default: return balance == 0 ? uniform(0, 10) : uniform(0, balance);
		}
	}

	uint64_t someActionId()
	{
		return uniform(0, m_state.nextActionId);
	}

	ScenarioEvent nextEvent()
	{
		ScenarioEvent event;
		event.principal = chance(2) ? "owner" : anyone();
		switch (uniform(0, 12))
		{
		case 0:
		case 1:
		case 2:
			event.op = OpKind::Transfer;
			event.opName = "transfer";
			event.address = anyone();
			event.amount = someAmount(event.principal);
			break;
		case 3:
			event.op = OpKind::ProposeMint;
			event.opName = "propose";
			event.amount = chance(2) ? uniform(0, m_state.windowCap + 1) : uniform(0, 1'000'000'000);
			break;
		case 4:
			event.op = OpKind::ProposeSetFee;
			event.opName = "propose";
			event.address = anyone();
			break;
		case 5:
			event.op = OpKind::ProposeMigrate;
			event.opName = "propose";
			event.address = pick(c_outsiders);
			break;
		case 6:
		case 7:
			event.op = OpKind::Execute;
			event.opName = "execute";
			event.actionId = someActionId();
			break;
		case 8:
			event.op = OpKind::Cancel;
			event.opName = "cancel";
			event.actionId = someActionId();
			break;
		case 9:
			event.op = OpKind::OptIn;
			event.opName = "optin";
			break;
		case 10:
			event.op = OpKind::Burn;
			event.opName = "burn";
			event.amount = someAmount(event.principal);
			break;
		case 11:
			event.op = OpKind::Probe;
			event.opName = "probe";
			event.address = anyone();
			event.payable = chance(2);
			break;
		default:
			if (chance(2))
			{
				event.op = OpKind::Forbidden;
				event.opName = pick(c_forbidden);
			}
			else
			{
				event.op = OpKind::Tick;
				event.opName = "tick";
			}
			break;
		}
		return event;
	}

	mt19937_64 m_random;
	Params m_defaults;
	TokenState m_state;
};

}

Scenario generateAdversarialScenario(uint64_t _seed, unsigned _maxEvents, Params const& _defaults)
{
	return Generator(_seed, _defaults).run(max(1u, _maxEvents));
}

}
