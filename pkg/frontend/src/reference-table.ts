// GENERATED from the python core (curvepoint.transfer); do not edit by hand.
// Rows are [controller speed m/s, standing distance m, gain, cursor diameter m].

export type ReferenceRow = [number, number, number, number];

export const RADIUS_M = 3.27;

export const REFERENCE_TABLE: Record<string, ReferenceRow[]> = {
  ABSOLUTE: [
    [0.0, 1.4715, 1.0, 0.025],
    [0.0, 1.725833, 1.0, 0.025],
    [0.0, 1.980167, 1.0, 0.025],
    [0.0, 2.2345, 1.0, 0.025],
    [0.0, 2.488833, 1.0, 0.025],
    [0.0, 2.743167, 1.0, 0.025],
    [0.0, 2.9975, 1.0, 0.025],
    [0.0, 3.251833, 1.0, 0.025],
    [0.0, 3.506167, 1.0, 0.025],
    [0.0, 3.7605, 1.0, 0.025],
    [0.12, 1.4715, 1.0, 0.025],
    [0.12, 1.725833, 1.0, 0.025],
    [0.12, 1.980167, 1.0, 0.025],
    [0.12, 2.2345, 1.0, 0.025],
    [0.12, 2.488833, 1.0, 0.025],
    [0.12, 2.743167, 1.0, 0.025],
    [0.12, 2.9975, 1.0, 0.025],
    [0.12, 3.251833, 1.0, 0.025],
    [0.12, 3.506167, 1.0, 0.025],
    [0.12, 3.7605, 1.0, 0.025],
    [0.24, 1.4715, 1.0, 0.025],
    [0.24, 1.725833, 1.0, 0.025],
    [0.24, 1.980167, 1.0, 0.025],
    [0.24, 2.2345, 1.0, 0.025],
    [0.24, 2.488833, 1.0, 0.025],
    [0.24, 2.743167, 1.0, 0.025],
    [0.24, 2.9975, 1.0, 0.025],
    [0.24, 3.251833, 1.0, 0.025],
    [0.24, 3.506167, 1.0, 0.025],
    [0.24, 3.7605, 1.0, 0.025],
    [0.36, 1.4715, 1.0, 0.025],
    [0.36, 1.725833, 1.0, 0.025],
    [0.36, 1.980167, 1.0, 0.025],
    [0.36, 2.2345, 1.0, 0.025],
    [0.36, 2.488833, 1.0, 0.025],
    [0.36, 2.743167, 1.0, 0.025],
    [0.36, 2.9975, 1.0, 0.025],
    [0.36, 3.251833, 1.0, 0.025],
    [0.36, 3.506167, 1.0, 0.025],
    [0.36, 3.7605, 1.0, 0.025],
    [0.48, 1.4715, 1.0, 0.025],
    [0.48, 1.725833, 1.0, 0.025],
    [0.48, 1.980167, 1.0, 0.025],
    [0.48, 2.2345, 1.0, 0.025],
    [0.48, 2.488833, 1.0, 0.025],
    [0.48, 2.743167, 1.0, 0.025],
    [0.48, 2.9975, 1.0, 0.025],
    [0.48, 3.251833, 1.0, 0.025],
    [0.48, 3.506167, 1.0, 0.025],
    [0.48, 3.7605, 1.0, 0.025],
    [0.6, 1.4715, 1.0, 0.025],
    [0.6, 1.725833, 1.0, 0.025],
    [0.6, 1.980167, 1.0, 0.025],
    [0.6, 2.2345, 1.0, 0.025],
    [0.6, 2.488833, 1.0, 0.025],
    [0.6, 2.743167, 1.0, 0.025],
    [0.6, 2.9975, 1.0, 0.025],
    [0.6, 3.251833, 1.0, 0.025],
    [0.6, 3.506167, 1.0, 0.025],
    [0.6, 3.7605, 1.0, 0.025],
    [0.72, 1.4715, 1.0, 0.025],
    [0.72, 1.725833, 1.0, 0.025],
    [0.72, 1.980167, 1.0, 0.025],
    [0.72, 2.2345, 1.0, 0.025],
    [0.72, 2.488833, 1.0, 0.025],
    [0.72, 2.743167, 1.0, 0.025],
    [0.72, 2.9975, 1.0, 0.025],
    [0.72, 3.251833, 1.0, 0.025],
    [0.72, 3.506167, 1.0, 0.025],
    [0.72, 3.7605, 1.0, 0.025],
    [0.84, 1.4715, 1.0, 0.025],
    [0.84, 1.725833, 1.0, 0.025],
    [0.84, 1.980167, 1.0, 0.025],
    [0.84, 2.2345, 1.0, 0.025],
    [0.84, 2.488833, 1.0, 0.025],
    [0.84, 2.743167, 1.0, 0.025],
    [0.84, 2.9975, 1.0, 0.025],
    [0.84, 3.251833, 1.0, 0.025],
    [0.84, 3.506167, 1.0, 0.025],
    [0.84, 3.7605, 1.0, 0.025],
    [0.96, 1.4715, 1.0, 0.025],
    [0.96, 1.725833, 1.0, 0.025],
    [0.96, 1.980167, 1.0, 0.025],
    [0.96, 2.2345, 1.0, 0.025],
    [0.96, 2.488833, 1.0, 0.025],
    [0.96, 2.743167, 1.0, 0.025],
    [0.96, 2.9975, 1.0, 0.025],
    [0.96, 3.251833, 1.0, 0.025],
    [0.96, 3.506167, 1.0, 0.025],
    [0.96, 3.7605, 1.0, 0.025],
    [1.08, 1.4715, 1.0, 0.025],
    [1.08, 1.725833, 1.0, 0.025],
    [1.08, 1.980167, 1.0, 0.025],
    [1.08, 2.2345, 1.0, 0.025],
    [1.08, 2.488833, 1.0, 0.025],
    [1.08, 2.743167, 1.0, 0.025],
    [1.08, 2.9975, 1.0, 0.025],
    [1.08, 3.251833, 1.0, 0.025],
    [1.08, 3.506167, 1.0, 0.025],
    [1.08, 3.7605, 1.0, 0.025],
  ],
  PA: [
    [0.0, 1.4715, 0.8000066805687392, 0.025],
    [0.0, 1.725833, 0.8000066805687392, 0.025],
    [0.0, 1.980167, 0.8000066805687392, 0.025],
    [0.0, 2.2345, 0.8000066805687392, 0.025],
    [0.0, 2.488833, 0.8000066805687392, 0.025],
    [0.0, 2.743167, 0.8000066805687392, 0.025],
    [0.0, 2.9975, 0.8000066805687392, 0.025],
    [0.0, 3.251833, 0.8000066805687392, 0.025],
    [0.0, 3.506167, 0.8000066805687392, 0.025],
    [0.0, 3.7605, 0.8000066805687392, 0.025],
    [0.12, 1.4715, 0.8000736287619854, 0.025],
    [0.12, 1.725833, 0.8000736287619854, 0.025],
    [0.12, 1.980167, 0.8000736287619854, 0.025],
    [0.12, 2.2345, 0.8000736287619854, 0.025],
    [0.12, 2.488833, 0.8000736287619854, 0.025],
    [0.12, 2.743167, 0.8000736287619854, 0.025],
    [0.12, 2.9975, 0.8000736287619854, 0.025],
    [0.12, 3.251833, 0.8000736287619854, 0.025],
    [0.12, 3.506167, 0.8000736287619854, 0.025],
    [0.12, 3.7605, 0.8000736287619854, 0.025],
    [0.24, 1.4715, 0.80081012815562, 0.025],
    [0.24, 1.725833, 0.80081012815562, 0.025],
    [0.24, 1.980167, 0.80081012815562, 0.025],
    [0.24, 2.2345, 0.80081012815562, 0.025],
    [0.24, 2.488833, 0.80081012815562, 0.025],
    [0.24, 2.743167, 0.80081012815562, 0.025],
    [0.24, 2.9975, 0.80081012815562, 0.025],
    [0.24, 3.251833, 0.80081012815562, 0.025],
    [0.24, 3.506167, 0.80081012815562, 0.025],
    [0.24, 3.7605, 0.80081012815562, 0.025],
    [0.36, 1.4715, 0.8087525083744522, 0.025],
    [0.36, 1.725833, 0.8087525083744522, 0.025],
    [0.36, 1.980167, 0.8087525083744522, 0.025],
    [0.36, 2.2345, 0.8087525083744522, 0.025],
    [0.36, 2.488833, 0.8087525083744522, 0.025],
    [0.36, 2.743167, 0.8087525083744522, 0.025],
    [0.36, 2.9975, 0.8087525083744522, 0.025],
    [0.36, 3.251833, 0.8087525083744522, 0.025],
    [0.36, 3.506167, 0.8087525083744522, 0.025],
    [0.36, 3.7605, 0.8087525083744522, 0.025],
    [0.48, 1.4715, 0.8791264445765672, 0.025],
    [0.48, 1.725833, 0.8791264445765672, 0.025],
    [0.48, 1.980167, 0.8791264445765672, 0.025],
    [0.48, 2.2345, 0.8791264445765672, 0.025],
    [0.48, 2.488833, 0.8791264445765672, 0.025],
    [0.48, 2.743167, 0.8791264445765672, 0.025],
    [0.48, 2.9975, 0.8791264445765672, 0.025],
    [0.48, 3.251833, 0.8791264445765672, 0.025],
    [0.48, 3.506167, 0.8791264445765672, 0.025],
    [0.48, 3.7605, 0.8791264445765672, 0.025],
    [0.6, 1.4715, 1.0924234314520018, 0.025],
    [0.6, 1.725833, 1.0924234314520018, 0.025],
    [0.6, 1.980167, 1.0924234314520018, 0.025],
    [0.6, 2.2345, 1.0924234314520018, 0.025],
    [0.6, 2.488833, 1.0924234314520018, 0.025],
    [0.6, 2.743167, 1.0924234314520018, 0.025],
    [0.6, 2.9975, 1.0924234314520018, 0.025],
    [0.6, 3.251833, 1.0924234314520018, 0.025],
    [0.6, 3.506167, 1.0924234314520018, 0.025],
    [0.6, 3.7605, 1.0924234314520018, 0.025],
    [0.72, 1.4715, 1.1870818141206196, 0.025],
    [0.72, 1.725833, 1.1870818141206196, 0.025],
    [0.72, 1.980167, 1.1870818141206196, 0.025],
    [0.72, 2.2345, 1.1870818141206196, 0.025],
    [0.72, 2.488833, 1.1870818141206196, 0.025],
    [0.72, 2.743167, 1.1870818141206196, 0.025],
    [0.72, 2.9975, 1.1870818141206196, 0.025],
    [0.72, 3.251833, 1.1870818141206196, 0.025],
    [0.72, 3.506167, 1.1870818141206196, 0.025],
    [0.72, 3.7605, 1.1870818141206196, 0.025],
    [0.84, 1.4715, 1.1987926334701167, 0.025],
    [0.84, 1.725833, 1.1987926334701167, 0.025],
    [0.84, 1.980167, 1.1987926334701167, 0.025],
    [0.84, 2.2345, 1.1987926334701167, 0.025],
    [0.84, 2.488833, 1.1987926334701167, 0.025],
    [0.84, 2.743167, 1.1987926334701167, 0.025],
    [0.84, 2.9975, 1.1987926334701167, 0.025],
    [0.84, 3.251833, 1.1987926334701167, 0.025],
    [0.84, 3.506167, 1.1987926334701167, 0.025],
    [0.84, 3.7605, 1.1987926334701167, 0.025],
    [0.96, 1.4715, 1.1998901687375594, 0.025],
    [0.96, 1.725833, 1.1998901687375594, 0.025],
    [0.96, 1.980167, 1.1998901687375594, 0.025],
    [0.96, 2.2345, 1.1998901687375594, 0.025],
    [0.96, 2.488833, 1.1998901687375594, 0.025],
    [0.96, 2.743167, 1.1998901687375594, 0.025],
    [0.96, 2.9975, 1.1998901687375594, 0.025],
    [0.96, 3.251833, 1.1998901687375594, 0.025],
    [0.96, 3.506167, 1.1998901687375594, 0.025],
    [0.96, 3.7605, 1.1998901687375594, 0.025],
    [1.08, 1.4715, 1.1999900338444243, 0.025],
    [1.08, 1.725833, 1.1999900338444243, 0.025],
    [1.08, 1.980167, 1.1999900338444243, 0.025],
    [1.08, 2.2345, 1.1999900338444243, 0.025],
    [1.08, 2.488833, 1.1999900338444243, 0.025],
    [1.08, 2.743167, 1.1999900338444243, 0.025],
    [1.08, 2.9975, 1.1999900338444243, 0.025],
    [1.08, 3.251833, 1.1999900338444243, 0.025],
    [1.08, 3.506167, 1.1999900338444243, 0.025],
    [1.08, 3.7605, 1.1999900338444243, 0.025],
  ],
  PASIZE: [
    [0.0, 1.4715, 0.8000066805687392, 0.025002922748823417],
    [0.0, 1.725833, 0.8000066805687392, 0.025002922748823417],
    [0.0, 1.980167, 0.8000066805687392, 0.025002922748823417],
    [0.0, 2.2345, 0.8000066805687392, 0.025002922748823417],
    [0.0, 2.488833, 0.8000066805687392, 0.025002922748823417],
    [0.0, 2.743167, 0.8000066805687392, 0.025002922748823417],
    [0.0, 2.9975, 0.8000066805687392, 0.025002922748823417],
    [0.0, 3.251833, 0.8000066805687392, 0.025002922748823417],
    [0.0, 3.506167, 0.8000066805687392, 0.025002922748823417],
    [0.0, 3.7605, 0.8000066805687392, 0.025002922748823417],
    [0.12, 1.4715, 0.8000736287619854, 0.0250322125833686],
    [0.12, 1.725833, 0.8000736287619854, 0.0250322125833686],
    [0.12, 1.980167, 0.8000736287619854, 0.0250322125833686],
    [0.12, 2.2345, 0.8000736287619854, 0.0250322125833686],
    [0.12, 2.488833, 0.8000736287619854, 0.0250322125833686],
    [0.12, 2.743167, 0.8000736287619854, 0.0250322125833686],
    [0.12, 2.9975, 0.8000736287619854, 0.0250322125833686],
    [0.12, 3.251833, 0.8000736287619854, 0.0250322125833686],
    [0.12, 3.506167, 0.8000736287619854, 0.0250322125833686],
    [0.12, 3.7605, 0.8000736287619854, 0.0250322125833686],
    [0.24, 1.4715, 0.80081012815562, 0.02535443106808373],
    [0.24, 1.725833, 0.80081012815562, 0.02535443106808373],
    [0.24, 1.980167, 0.80081012815562, 0.02535443106808373],
    [0.24, 2.2345, 0.80081012815562, 0.02535443106808373],
    [0.24, 2.488833, 0.80081012815562, 0.02535443106808373],
    [0.24, 2.743167, 0.80081012815562, 0.02535443106808373],
    [0.24, 2.9975, 0.80081012815562, 0.02535443106808373],
    [0.24, 3.251833, 0.80081012815562, 0.02535443106808373],
    [0.24, 3.506167, 0.80081012815562, 0.02535443106808373],
    [0.24, 3.7605, 0.80081012815562, 0.02535443106808373],
    [0.36, 1.4715, 0.8087525083744522, 0.028829222413822832],
    [0.36, 1.725833, 0.8087525083744522, 0.028829222413822832],
    [0.36, 1.980167, 0.8087525083744522, 0.028829222413822832],
    [0.36, 2.2345, 0.8087525083744522, 0.028829222413822832],
    [0.36, 2.488833, 0.8087525083744522, 0.028829222413822832],
    [0.36, 2.743167, 0.8087525083744522, 0.028829222413822832],
    [0.36, 2.9975, 0.8087525083744522, 0.028829222413822832],
    [0.36, 3.251833, 0.8087525083744522, 0.028829222413822832],
    [0.36, 3.506167, 0.8087525083744522, 0.028829222413822832],
    [0.36, 3.7605, 0.8087525083744522, 0.028829222413822832],
    [0.48, 1.4715, 0.8791264445765672, 0.05961781950224816],
    [0.48, 1.725833, 0.8791264445765672, 0.05961781950224816],
    [0.48, 1.980167, 0.8791264445765672, 0.05961781950224816],
    [0.48, 2.2345, 0.8791264445765672, 0.05961781950224816],
    [0.48, 2.488833, 0.8791264445765672, 0.05961781950224816],
    [0.48, 2.743167, 0.8791264445765672, 0.05961781950224816],
    [0.48, 2.9975, 0.8791264445765672, 0.05961781950224816],
    [0.48, 3.251833, 0.8791264445765672, 0.05961781950224816],
    [0.48, 3.506167, 0.8791264445765672, 0.05961781950224816],
    [0.48, 3.7605, 0.8791264445765672, 0.05961781950224816],
    [0.6, 1.4715, 1.0924234314520018, 0.15293525126025082],
    [0.6, 1.725833, 1.0924234314520018, 0.15293525126025082],
    [0.6, 1.980167, 1.0924234314520018, 0.15293525126025082],
    [0.6, 2.2345, 1.0924234314520018, 0.15293525126025082],
    [0.6, 2.488833, 1.0924234314520018, 0.15293525126025082],
    [0.6, 2.743167, 1.0924234314520018, 0.15293525126025082],
    [0.6, 2.9975, 1.0924234314520018, 0.15293525126025082],
    [0.6, 3.251833, 1.0924234314520018, 0.15293525126025082],
    [0.6, 3.506167, 1.0924234314520018, 0.15293525126025082],
    [0.6, 3.7605, 1.0924234314520018, 0.15293525126025082],
    [0.72, 1.4715, 1.1870818141206196, 0.19434829367777115],
    [0.72, 1.725833, 1.1870818141206196, 0.19434829367777115],
    [0.72, 1.980167, 1.1870818141206196, 0.19434829367777115],
    [0.72, 2.2345, 1.1870818141206196, 0.19434829367777115],
    [0.72, 2.488833, 1.1870818141206196, 0.19434829367777115],
    [0.72, 2.743167, 1.1870818141206196, 0.19434829367777115],
    [0.72, 2.9975, 1.1870818141206196, 0.19434829367777115],
    [0.72, 3.251833, 1.1870818141206196, 0.19434829367777115],
    [0.72, 3.506167, 1.1870818141206196, 0.19434829367777115],
    [0.72, 3.7605, 1.1870818141206196, 0.19434829367777115],
    [0.84, 1.4715, 1.1987926334701167, 0.19947177714317604],
    [0.84, 1.725833, 1.1987926334701167, 0.19947177714317604],
    [0.84, 1.980167, 1.1987926334701167, 0.19947177714317604],
    [0.84, 2.2345, 1.1987926334701167, 0.19947177714317604],
    [0.84, 2.488833, 1.1987926334701167, 0.19947177714317604],
    [0.84, 2.743167, 1.1987926334701167, 0.19947177714317604],
    [0.84, 2.9975, 1.1987926334701167, 0.19947177714317604],
    [0.84, 3.251833, 1.1987926334701167, 0.19947177714317604],
    [0.84, 3.506167, 1.1987926334701167, 0.19947177714317604],
    [0.84, 3.7605, 1.1987926334701167, 0.19947177714317604],
    [0.96, 1.4715, 1.1998901687375594, 0.19995194882268225],
    [0.96, 1.725833, 1.1998901687375594, 0.19995194882268225],
    [0.96, 1.980167, 1.1998901687375594, 0.19995194882268225],
    [0.96, 2.2345, 1.1998901687375594, 0.19995194882268225],
    [0.96, 2.488833, 1.1998901687375594, 0.19995194882268225],
    [0.96, 2.743167, 1.1998901687375594, 0.19995194882268225],
    [0.96, 2.9975, 1.1998901687375594, 0.19995194882268225],
    [0.96, 3.251833, 1.1998901687375594, 0.19995194882268225],
    [0.96, 3.506167, 1.1998901687375594, 0.19995194882268225],
    [0.96, 3.7605, 1.1998901687375594, 0.19995194882268225],
    [1.08, 1.4715, 1.1999900338444243, 0.19999563980693563],
    [1.08, 1.725833, 1.1999900338444243, 0.19999563980693563],
    [1.08, 1.980167, 1.1999900338444243, 0.19999563980693563],
    [1.08, 2.2345, 1.1999900338444243, 0.19999563980693563],
    [1.08, 2.488833, 1.1999900338444243, 0.19999563980693563],
    [1.08, 2.743167, 1.1999900338444243, 0.19999563980693563],
    [1.08, 2.9975, 1.1999900338444243, 0.19999563980693563],
    [1.08, 3.251833, 1.1999900338444243, 0.19999563980693563],
    [1.08, 3.506167, 1.1999900338444243, 0.19999563980693563],
    [1.08, 3.7605, 1.1999900338444243, 0.19999563980693563],
  ],
  PBA: [
    [0.0, 1.4715, 4.499936534596977, 0.025],
    [0.0, 1.725833, 4.499699338208463, 0.025],
    [0.0, 1.980167, 4.498575964590124, 0.025],
    [0.0, 2.2345, 4.493262772539789, 0.025],
    [0.0, 2.488833, 4.468291110267793, 0.025],
    [0.0, 2.743167, 4.3543154202983825, 0.025],
    [0.0, 2.9975, 3.8962974014525233, 0.025],
    [0.0, 3.251833, 2.705449024040731, 0.025],
    [0.0, 3.506167, 1.4252593717219588, 0.025],
    [0.0, 3.7605, 0.8802183180747543, 0.025],
    [0.12, 1.4715, 4.499936534596977, 0.025],
    [0.12, 1.725833, 4.499699338208463, 0.025],
    [0.12, 1.980167, 4.498575964590124, 0.025],
    [0.12, 2.2345, 4.493262772539789, 0.025],
    [0.12, 2.488833, 4.468291110267793, 0.025],
    [0.12, 2.743167, 4.3543154202983825, 0.025],
    [0.12, 2.9975, 3.8962974014525233, 0.025],
    [0.12, 3.251833, 2.705449024040731, 0.025],
    [0.12, 3.506167, 1.4252593717219588, 0.025],
    [0.12, 3.7605, 0.8802183180747543, 0.025],
    [0.24, 1.4715, 4.499936534596977, 0.025],
    [0.24, 1.725833, 4.499699338208463, 0.025],
    [0.24, 1.980167, 4.498575964590124, 0.025],
    [0.24, 2.2345, 4.493262772539789, 0.025],
    [0.24, 2.488833, 4.468291110267793, 0.025],
    [0.24, 2.743167, 4.3543154202983825, 0.025],
    [0.24, 2.9975, 3.8962974014525233, 0.025],
    [0.24, 3.251833, 2.705449024040731, 0.025],
    [0.24, 3.506167, 1.4252593717219588, 0.025],
    [0.24, 3.7605, 0.8802183180747543, 0.025],
    [0.36, 1.4715, 4.499936534596977, 0.025],
    [0.36, 1.725833, 4.499699338208463, 0.025],
    [0.36, 1.980167, 4.498575964590124, 0.025],
    [0.36, 2.2345, 4.493262772539789, 0.025],
    [0.36, 2.488833, 4.468291110267793, 0.025],
    [0.36, 2.743167, 4.3543154202983825, 0.025],
    [0.36, 2.9975, 3.8962974014525233, 0.025],
    [0.36, 3.251833, 2.705449024040731, 0.025],
    [0.36, 3.506167, 1.4252593717219588, 0.025],
    [0.36, 3.7605, 0.8802183180747543, 0.025],
    [0.48, 1.4715, 4.499936534596977, 0.025],
    [0.48, 1.725833, 4.499699338208463, 0.025],
    [0.48, 1.980167, 4.498575964590124, 0.025],
    [0.48, 2.2345, 4.493262772539789, 0.025],
    [0.48, 2.488833, 4.468291110267793, 0.025],
    [0.48, 2.743167, 4.3543154202983825, 0.025],
    [0.48, 2.9975, 3.8962974014525233, 0.025],
    [0.48, 3.251833, 2.705449024040731, 0.025],
    [0.48, 3.506167, 1.4252593717219588, 0.025],
    [0.48, 3.7605, 0.8802183180747543, 0.025],
    [0.6, 1.4715, 4.499936534596977, 0.025],
    [0.6, 1.725833, 4.499699338208463, 0.025],
    [0.6, 1.980167, 4.498575964590124, 0.025],
    [0.6, 2.2345, 4.493262772539789, 0.025],
    [0.6, 2.488833, 4.468291110267793, 0.025],
    [0.6, 2.743167, 4.3543154202983825, 0.025],
    [0.6, 2.9975, 3.8962974014525233, 0.025],
    [0.6, 3.251833, 2.705449024040731, 0.025],
    [0.6, 3.506167, 1.4252593717219588, 0.025],
    [0.6, 3.7605, 0.8802183180747543, 0.025],
    [0.72, 1.4715, 4.499936534596977, 0.025],
    [0.72, 1.725833, 4.499699338208463, 0.025],
    [0.72, 1.980167, 4.498575964590124, 0.025],
    [0.72, 2.2345, 4.493262772539789, 0.025],
    [0.72, 2.488833, 4.468291110267793, 0.025],
    [0.72, 2.743167, 4.3543154202983825, 0.025],
    [0.72, 2.9975, 3.8962974014525233, 0.025],
    [0.72, 3.251833, 2.705449024040731, 0.025],
    [0.72, 3.506167, 1.4252593717219588, 0.025],
    [0.72, 3.7605, 0.8802183180747543, 0.025],
    [0.84, 1.4715, 4.499936534596977, 0.025],
    [0.84, 1.725833, 4.499699338208463, 0.025],
    [0.84, 1.980167, 4.498575964590124, 0.025],
    [0.84, 2.2345, 4.493262772539789, 0.025],
    [0.84, 2.488833, 4.468291110267793, 0.025],
    [0.84, 2.743167, 4.3543154202983825, 0.025],
    [0.84, 2.9975, 3.8962974014525233, 0.025],
    [0.84, 3.251833, 2.705449024040731, 0.025],
    [0.84, 3.506167, 1.4252593717219588, 0.025],
    [0.84, 3.7605, 0.8802183180747543, 0.025],
    [0.96, 1.4715, 4.499936534596977, 0.025],
    [0.96, 1.725833, 4.499699338208463, 0.025],
    [0.96, 1.980167, 4.498575964590124, 0.025],
    [0.96, 2.2345, 4.493262772539789, 0.025],
    [0.96, 2.488833, 4.468291110267793, 0.025],
    [0.96, 2.743167, 4.3543154202983825, 0.025],
    [0.96, 2.9975, 3.8962974014525233, 0.025],
    [0.96, 3.251833, 2.705449024040731, 0.025],
    [0.96, 3.506167, 1.4252593717219588, 0.025],
    [0.96, 3.7605, 0.8802183180747543, 0.025],
    [1.08, 1.4715, 4.499936534596977, 0.025],
    [1.08, 1.725833, 4.499699338208463, 0.025],
    [1.08, 1.980167, 4.498575964590124, 0.025],
    [1.08, 2.2345, 4.493262772539789, 0.025],
    [1.08, 2.488833, 4.468291110267793, 0.025],
    [1.08, 2.743167, 4.3543154202983825, 0.025],
    [1.08, 2.9975, 3.8962974014525233, 0.025],
    [1.08, 3.251833, 2.705449024040731, 0.025],
    [1.08, 3.506167, 1.4252593717219588, 0.025],
    [1.08, 3.7605, 0.8802183180747543, 0.025],
  ],
  PBASIZE: [
    [0.0, 1.4715, 4.499936534596977, 0.025002922748823417],
    [0.0, 1.725833, 4.499699338208463, 0.025002922748823417],
    [0.0, 1.980167, 4.498575964590124, 0.025002922748823417],
    [0.0, 2.2345, 4.493262772539789, 0.025002922748823417],
    [0.0, 2.488833, 4.468291110267793, 0.025002922748823417],
    [0.0, 2.743167, 4.3543154202983825, 0.025002922748823417],
    [0.0, 2.9975, 3.8962974014525233, 0.025002922748823417],
    [0.0, 3.251833, 2.705449024040731, 0.025002922748823417],
    [0.0, 3.506167, 1.4252593717219588, 0.025002922748823417],
    [0.0, 3.7605, 0.8802183180747543, 0.025002922748823417],
    [0.12, 1.4715, 4.499936534596977, 0.0250322125833686],
    [0.12, 1.725833, 4.499699338208463, 0.0250322125833686],
    [0.12, 1.980167, 4.498575964590124, 0.0250322125833686],
    [0.12, 2.2345, 4.493262772539789, 0.0250322125833686],
    [0.12, 2.488833, 4.468291110267793, 0.0250322125833686],
    [0.12, 2.743167, 4.3543154202983825, 0.0250322125833686],
    [0.12, 2.9975, 3.8962974014525233, 0.0250322125833686],
    [0.12, 3.251833, 2.705449024040731, 0.0250322125833686],
    [0.12, 3.506167, 1.4252593717219588, 0.0250322125833686],
    [0.12, 3.7605, 0.8802183180747543, 0.0250322125833686],
    [0.24, 1.4715, 4.499936534596977, 0.02535443106808373],
    [0.24, 1.725833, 4.499699338208463, 0.02535443106808373],
    [0.24, 1.980167, 4.498575964590124, 0.02535443106808373],
    [0.24, 2.2345, 4.493262772539789, 0.02535443106808373],
    [0.24, 2.488833, 4.468291110267793, 0.02535443106808373],
    [0.24, 2.743167, 4.3543154202983825, 0.02535443106808373],
    [0.24, 2.9975, 3.8962974014525233, 0.02535443106808373],
    [0.24, 3.251833, 2.705449024040731, 0.02535443106808373],
    [0.24, 3.506167, 1.4252593717219588, 0.02535443106808373],
    [0.24, 3.7605, 0.8802183180747543, 0.02535443106808373],
    [0.36, 1.4715, 4.499936534596977, 0.028829222413822832],
    [0.36, 1.725833, 4.499699338208463, 0.028829222413822832],
    [0.36, 1.980167, 4.498575964590124, 0.028829222413822832],
    [0.36, 2.2345, 4.493262772539789, 0.028829222413822832],
    [0.36, 2.488833, 4.468291110267793, 0.028829222413822832],
    [0.36, 2.743167, 4.3543154202983825, 0.028829222413822832],
    [0.36, 2.9975, 3.8962974014525233, 0.028829222413822832],
    [0.36, 3.251833, 2.705449024040731, 0.028829222413822832],
    [0.36, 3.506167, 1.4252593717219588, 0.028829222413822832],
    [0.36, 3.7605, 0.8802183180747543, 0.028829222413822832],
    [0.48, 1.4715, 4.499936534596977, 0.05961781950224816],
    [0.48, 1.725833, 4.499699338208463, 0.05961781950224816],
    [0.48, 1.980167, 4.498575964590124, 0.05961781950224816],
    [0.48, 2.2345, 4.493262772539789, 0.05961781950224816],
    [0.48, 2.488833, 4.468291110267793, 0.05961781950224816],
    [0.48, 2.743167, 4.3543154202983825, 0.05961781950224816],
    [0.48, 2.9975, 3.8962974014525233, 0.05961781950224816],
    [0.48, 3.251833, 2.705449024040731, 0.05961781950224816],
    [0.48, 3.506167, 1.4252593717219588, 0.05961781950224816],
    [0.48, 3.7605, 0.8802183180747543, 0.05961781950224816],
    [0.6, 1.4715, 4.499936534596977, 0.15293525126025082],
    [0.6, 1.725833, 4.499699338208463, 0.15293525126025082],
    [0.6, 1.980167, 4.498575964590124, 0.15293525126025082],
    [0.6, 2.2345, 4.493262772539789, 0.15293525126025082],
    [0.6, 2.488833, 4.468291110267793, 0.15293525126025082],
    [0.6, 2.743167, 4.3543154202983825, 0.15293525126025082],
    [0.6, 2.9975, 3.8962974014525233, 0.15293525126025082],
    [0.6, 3.251833, 2.705449024040731, 0.15293525126025082],
    [0.6, 3.506167, 1.4252593717219588, 0.15293525126025082],
    [0.6, 3.7605, 0.8802183180747543, 0.15293525126025082],
    [0.72, 1.4715, 4.499936534596977, 0.19434829367777115],
    [0.72, 1.725833, 4.499699338208463, 0.19434829367777115],
    [0.72, 1.980167, 4.498575964590124, 0.19434829367777115],
    [0.72, 2.2345, 4.493262772539789, 0.19434829367777115],
    [0.72, 2.488833, 4.468291110267793, 0.19434829367777115],
    [0.72, 2.743167, 4.3543154202983825, 0.19434829367777115],
    [0.72, 2.9975, 3.8962974014525233, 0.19434829367777115],
    [0.72, 3.251833, 2.705449024040731, 0.19434829367777115],
    [0.72, 3.506167, 1.4252593717219588, 0.19434829367777115],
    [0.72, 3.7605, 0.8802183180747543, 0.19434829367777115],
    [0.84, 1.4715, 4.499936534596977, 0.19947177714317604],
    [0.84, 1.725833, 4.499699338208463, 0.19947177714317604],
    [0.84, 1.980167, 4.498575964590124, 0.19947177714317604],
    [0.84, 2.2345, 4.493262772539789, 0.19947177714317604],
    [0.84, 2.488833, 4.468291110267793, 0.19947177714317604],
    [0.84, 2.743167, 4.3543154202983825, 0.19947177714317604],
    [0.84, 2.9975, 3.8962974014525233, 0.19947177714317604],
    [0.84, 3.251833, 2.705449024040731, 0.19947177714317604],
    [0.84, 3.506167, 1.4252593717219588, 0.19947177714317604],
    [0.84, 3.7605, 0.8802183180747543, 0.19947177714317604],
    [0.96, 1.4715, 4.499936534596977, 0.19995194882268225],
    [0.96, 1.725833, 4.499699338208463, 0.19995194882268225],
    [0.96, 1.980167, 4.498575964590124, 0.19995194882268225],
    [0.96, 2.2345, 4.493262772539789, 0.19995194882268225],
    [0.96, 2.488833, 4.468291110267793, 0.19995194882268225],
    [0.96, 2.743167, 4.3543154202983825, 0.19995194882268225],
    [0.96, 2.9975, 3.8962974014525233, 0.19995194882268225],
    [0.96, 3.251833, 2.705449024040731, 0.19995194882268225],
    [0.96, 3.506167, 1.4252593717219588, 0.19995194882268225],
    [0.96, 3.7605, 0.8802183180747543, 0.19995194882268225],
    [1.08, 1.4715, 4.499936534596977, 0.19999563980693563],
    [1.08, 1.725833, 4.499699338208463, 0.19999563980693563],
    [1.08, 1.980167, 4.498575964590124, 0.19999563980693563],
    [1.08, 2.2345, 4.493262772539789, 0.19999563980693563],
    [1.08, 2.488833, 4.468291110267793, 0.19999563980693563],
    [1.08, 2.743167, 4.3543154202983825, 0.19999563980693563],
    [1.08, 2.9975, 3.8962974014525233, 0.19999563980693563],
    [1.08, 3.251833, 2.705449024040731, 0.19999563980693563],
    [1.08, 3.506167, 1.4252593717219588, 0.19999563980693563],
    [1.08, 3.7605, 0.8802183180747543, 0.19999563980693563],
  ],
  PADIST: [
    [0.0, 1.4715, 0.8000066805687392, 0.025],
    [0.0, 1.725833, 0.7944511454005435, 0.025],
    [0.0, 1.980167, 0.7788955490702683, 0.025],
    [0.0, 2.2345, 0.7633400139020726, 0.025],
    [0.0, 2.488833, 0.7477844787338769, 0.025],
    [0.0, 2.743167, 0.7322288824036016, 0.025],
    [0.0, 2.9975, 0.7166733472354059, 0.025],
    [0.0, 3.251833, 0.7011178120672102, 0.025],
    [0.0, 3.506167, 0.685562215736935, 0.025],
    [0.0, 3.7605, 0.6700066805687392, 0.025],
    [0.12, 1.4715, 0.8000736287619854, 0.025],
    [0.12, 1.725833, 0.7945180935937897, 0.025],
    [0.12, 1.980167, 0.7789624972635144, 0.025],
    [0.12, 2.2345, 0.7634069620953188, 0.025],
    [0.12, 2.488833, 0.747851426927123, 0.025],
    [0.12, 2.743167, 0.7322958305968478, 0.025],
    [0.12, 2.9975, 0.716740295428652, 0.025],
    [0.12, 3.251833, 0.7011847602604564, 0.025],
    [0.12, 3.506167, 0.6856291639301811, 0.025],
    [0.12, 3.7605, 0.6700736287619854, 0.025],
    [0.24, 1.4715, 0.80081012815562, 0.025],
    [0.24, 1.725833, 0.7952545929874243, 0.025],
    [0.24, 1.980167, 0.779698996657149, 0.025],
    [0.24, 2.2345, 0.7641434614889534, 0.025],
    [0.24, 2.488833, 0.7485879263207577, 0.025],
    [0.24, 2.743167, 0.7330323299904824, 0.025],
    [0.24, 2.9975, 0.7174767948222867, 0.025],
    [0.24, 3.251833, 0.701921259654091, 0.025],
    [0.24, 3.506167, 0.6863656633238158, 0.025],
    [0.24, 3.7605, 0.67081012815562, 0.025],
    [0.36, 1.4715, 0.8087525083744522, 0.025],
    [0.36, 1.725833, 0.8031969732062565, 0.025],
    [0.36, 1.980167, 0.7876413768759812, 0.025],
    [0.36, 2.2345, 0.7720858417077856, 0.025],
    [0.36, 2.488833, 0.7565303065395899, 0.025],
    [0.36, 2.743167, 0.7409747102093146, 0.025],
    [0.36, 2.9975, 0.7254191750411189, 0.025],
    [0.36, 3.251833, 0.7098636398729232, 0.025],
    [0.36, 3.506167, 0.694308043542648, 0.025],
    [0.36, 3.7605, 0.6787525083744522, 0.025],
    [0.48, 1.4715, 0.8791264445765672, 0.025],
    [0.48, 1.725833, 0.8735709094083715, 0.025],
    [0.48, 1.980167, 0.8580153130780963, 0.025],
    [0.48, 2.2345, 0.8424597779099006, 0.025],
    [0.48, 2.488833, 0.8269042427417048, 0.025],
    [0.48, 2.743167, 0.8113486464114296, 0.025],
    [0.48, 2.9975, 0.7957931112432339, 0.025],
    [0.48, 3.251833, 0.7802375760750382, 0.025],
    [0.48, 3.506167, 0.7646819797447629, 0.025],
    [0.48, 3.7605, 0.7491264445765673, 0.025],
    [0.6, 1.4715, 1.0924234314520018, 0.025],
    [0.6, 1.725833, 1.086867896283806, 0.025],
    [0.6, 1.980167, 1.071312299953531, 0.025],
    [0.6, 2.2345, 1.0557567647853352, 0.025],
    [0.6, 2.488833, 1.0402012296171395, 0.025],
    [0.6, 2.743167, 1.024645633286864, 0.025],
    [0.6, 2.9975, 1.0090900981186686, 0.025],
    [0.6, 3.251833, 0.9935345629504728, 0.025],
    [0.6, 3.506167, 0.9779789666201975, 0.025],
    [0.6, 3.7605, 0.9624234314520019, 0.025],
    [0.72, 1.4715, 1.1870818141206196, 0.025],
    [0.72, 1.725833, 1.181526278952424, 0.025],
    [0.72, 1.980167, 1.1659706826221488, 0.025],
    [0.72, 2.2345, 1.150415147453953, 0.025],
    [0.72, 2.488833, 1.1348596122857573, 0.025],
    [0.72, 2.743167, 1.119304015955482, 0.025],
    [0.72, 2.9975, 1.1037484807872864, 0.025],
    [0.72, 3.251833, 1.0881929456190906, 0.025],
    [0.72, 3.506167, 1.0726373492888153, 0.025],
    [0.72, 3.7605, 1.0570818141206197, 0.025],
    [0.84, 1.4715, 1.1987926334701167, 0.025],
    [0.84, 1.725833, 1.193237098301921, 0.025],
    [0.84, 1.980167, 1.1776815019716458, 0.025],
    [0.84, 2.2345, 1.16212596680345, 0.025],
    [0.84, 2.488833, 1.1465704316352543, 0.025],
    [0.84, 2.743167, 1.131014835304979, 0.025],
    [0.84, 2.9975, 1.1154593001367834, 0.025],
    [0.84, 3.251833, 1.0999037649685877, 0.025],
    [0.84, 3.506167, 1.0843481686383123, 0.025],
    [0.84, 3.7605, 1.0687926334701168, 0.025],
    [0.96, 1.4715, 1.1998901687375594, 0.025],
    [0.96, 1.725833, 1.1943346335693636, 0.025],
    [0.96, 1.980167, 1.1787790372390885, 0.025],
    [0.96, 2.2345, 1.1632235020708928, 0.025],
    [0.96, 2.488833, 1.147667966902697, 0.025],
    [0.96, 2.743167, 1.1321123705724216, 0.025],
    [0.96, 2.9975, 1.1165568354042261, 0.025],
    [0.96, 3.251833, 1.1010013002360304, 0.025],
    [0.96, 3.506167, 1.085445703905755, 0.025],
    [0.96, 3.7605, 1.0698901687375595, 0.025],
    [1.08, 1.4715, 1.1999900338444243, 0.025],
    [1.08, 1.725833, 1.1944344986762285, 0.025],
    [1.08, 1.980167, 1.1788789023459534, 0.025],
    [1.08, 2.2345, 1.1633233671777576, 0.025],
    [1.08, 2.488833, 1.147767832009562, 0.025],
    [1.08, 2.743167, 1.1322122356792865, 0.025],
    [1.08, 2.9975, 1.116656700511091, 0.025],
    [1.08, 3.251833, 1.1011011653428953, 0.025],
    [1.08, 3.506167, 1.08554556901262, 0.025],
    [1.08, 3.7605, 1.0699900338444244, 0.025],
  ],
  PADISTSIZE: [
    [0.0, 1.4715, 0.8000066805687392, 0.025002922748823417],
    [0.0, 1.725833, 0.7944511454005435, 0.025002922748823417],
    [0.0, 1.980167, 0.7788955490702683, 0.025002922748823417],
    [0.0, 2.2345, 0.7633400139020726, 0.025002922748823417],
    [0.0, 2.488833, 0.7477844787338769, 0.025002922748823417],
    [0.0, 2.743167, 0.7322288824036016, 0.025002922748823417],
    [0.0, 2.9975, 0.7166733472354059, 0.025002922748823417],
    [0.0, 3.251833, 0.7011178120672102, 0.025002922748823417],
    [0.0, 3.506167, 0.685562215736935, 0.025002922748823417],
    [0.0, 3.7605, 0.6700066805687392, 0.025002922748823417],
    [0.12, 1.4715, 0.8000736287619854, 0.0250322125833686],
    [0.12, 1.725833, 0.7945180935937897, 0.0250322125833686],
    [0.12, 1.980167, 0.7789624972635144, 0.0250322125833686],
    [0.12, 2.2345, 0.7634069620953188, 0.0250322125833686],
    [0.12, 2.488833, 0.747851426927123, 0.0250322125833686],
    [0.12, 2.743167, 0.7322958305968478, 0.0250322125833686],
    [0.12, 2.9975, 0.716740295428652, 0.0250322125833686],
    [0.12, 3.251833, 0.7011847602604564, 0.0250322125833686],
    [0.12, 3.506167, 0.6856291639301811, 0.0250322125833686],
    [0.12, 3.7605, 0.6700736287619854, 0.0250322125833686],
    [0.24, 1.4715, 0.80081012815562, 0.02535443106808373],
    [0.24, 1.725833, 0.7952545929874243, 0.02535443106808373],
    [0.24, 1.980167, 0.779698996657149, 0.02535443106808373],
    [0.24, 2.2345, 0.7641434614889534, 0.02535443106808373],
    [0.24, 2.488833, 0.7485879263207577, 0.02535443106808373],
    [0.24, 2.743167, 0.7330323299904824, 0.02535443106808373],
    [0.24, 2.9975, 0.7174767948222867, 0.02535443106808373],
    [0.24, 3.251833, 0.701921259654091, 0.02535443106808373],
    [0.24, 3.506167, 0.6863656633238158, 0.02535443106808373],
    [0.24, 3.7605, 0.67081012815562, 0.02535443106808373],
    [0.36, 1.4715, 0.8087525083744522, 0.028829222413822832],
    [0.36, 1.725833, 0.8031969732062565, 0.028829222413822832],
    [0.36, 1.980167, 0.7876413768759812, 0.028829222413822832],
    [0.36, 2.2345, 0.7720858417077856, 0.028829222413822832],
    [0.36, 2.488833, 0.7565303065395899, 0.028829222413822832],
    [0.36, 2.743167, 0.7409747102093146, 0.028829222413822832],
    [0.36, 2.9975, 0.7254191750411189, 0.028829222413822832],
    [0.36, 3.251833, 0.7098636398729232, 0.028829222413822832],
    [0.36, 3.506167, 0.694308043542648, 0.028829222413822832],
    [0.36, 3.7605, 0.6787525083744522, 0.028829222413822832],
    [0.48, 1.4715, 0.8791264445765672, 0.05961781950224816],
    [0.48, 1.725833, 0.8735709094083715, 0.05961781950224816],
    [0.48, 1.980167, 0.8580153130780963, 0.05961781950224816],
    [0.48, 2.2345, 0.8424597779099006, 0.05961781950224816],
    [0.48, 2.488833, 0.8269042427417048, 0.05961781950224816],
    [0.48, 2.743167, 0.8113486464114296, 0.05961781950224816],
    [0.48, 2.9975, 0.7957931112432339, 0.05961781950224816],
    [0.48, 3.251833, 0.7802375760750382, 0.05961781950224816],
    [0.48, 3.506167, 0.7646819797447629, 0.05961781950224816],
    [0.48, 3.7605, 0.7491264445765673, 0.05961781950224816],
    [0.6, 1.4715, 1.0924234314520018, 0.15293525126025082],
    [0.6, 1.725833, 1.086867896283806, 0.15293525126025082],
    [0.6, 1.980167, 1.071312299953531, 0.15293525126025082],
    [0.6, 2.2345, 1.0557567647853352, 0.15293525126025082],
    [0.6, 2.488833, 1.0402012296171395, 0.15293525126025082],
    [0.6, 2.743167, 1.024645633286864, 0.15293525126025082],
    [0.6, 2.9975, 1.0090900981186686, 0.15293525126025082],
    [0.6, 3.251833, 0.9935345629504728, 0.15293525126025082],
    [0.6, 3.506167, 0.9779789666201975, 0.15293525126025082],
    [0.6, 3.7605, 0.9624234314520019, 0.15293525126025082],
    [0.72, 1.4715, 1.1870818141206196, 0.19434829367777115],
    [0.72, 1.725833, 1.181526278952424, 0.19434829367777115],
    [0.72, 1.980167, 1.1659706826221488, 0.19434829367777115],
    [0.72, 2.2345, 1.150415147453953, 0.19434829367777115],
    [0.72, 2.488833, 1.1348596122857573, 0.19434829367777115],
    [0.72, 2.743167, 1.119304015955482, 0.19434829367777115],
    [0.72, 2.9975, 1.1037484807872864, 0.19434829367777115],
    [0.72, 3.251833, 1.0881929456190906, 0.19434829367777115],
    [0.72, 3.506167, 1.0726373492888153, 0.19434829367777115],
    [0.72, 3.7605, 1.0570818141206197, 0.19434829367777115],
    [0.84, 1.4715, 1.1987926334701167, 0.19947177714317604],
    [0.84, 1.725833, 1.193237098301921, 0.19947177714317604],
    [0.84, 1.980167, 1.1776815019716458, 0.19947177714317604],
    [0.84, 2.2345, 1.16212596680345, 0.19947177714317604],
    [0.84, 2.488833, 1.1465704316352543, 0.19947177714317604],
    [0.84, 2.743167, 1.131014835304979, 0.19947177714317604],
    [0.84, 2.9975, 1.1154593001367834, 0.19947177714317604],
    [0.84, 3.251833, 1.0999037649685877, 0.19947177714317604],
    [0.84, 3.506167, 1.0843481686383123, 0.19947177714317604],
    [0.84, 3.7605, 1.0687926334701168, 0.19947177714317604],
    [0.96, 1.4715, 1.1998901687375594, 0.19995194882268225],
    [0.96, 1.725833, 1.1943346335693636, 0.19995194882268225],
    [0.96, 1.980167, 1.1787790372390885, 0.19995194882268225],
    [0.96, 2.2345, 1.1632235020708928, 0.19995194882268225],
    [0.96, 2.488833, 1.147667966902697, 0.19995194882268225],
    [0.96, 2.743167, 1.1321123705724216, 0.19995194882268225],
    [0.96, 2.9975, 1.1165568354042261, 0.19995194882268225],
    [0.96, 3.251833, 1.1010013002360304, 0.19995194882268225],
    [0.96, 3.506167, 1.085445703905755, 0.19995194882268225],
    [0.96, 3.7605, 1.0698901687375595, 0.19995194882268225],
    [1.08, 1.4715, 1.1999900338444243, 0.19999563980693563],
    [1.08, 1.725833, 1.1944344986762285, 0.19999563980693563],
    [1.08, 1.980167, 1.1788789023459534, 0.19999563980693563],
    [1.08, 2.2345, 1.1633233671777576, 0.19999563980693563],
    [1.08, 2.488833, 1.147767832009562, 0.19999563980693563],
    [1.08, 2.743167, 1.1322122356792865, 0.19999563980693563],
    [1.08, 2.9975, 1.116656700511091, 0.19999563980693563],
    [1.08, 3.251833, 1.1011011653428953, 0.19999563980693563],
    [1.08, 3.506167, 1.08554556901262, 0.19999563980693563],
    [1.08, 3.7605, 1.0699900338444244, 0.19999563980693563],
  ],
};
