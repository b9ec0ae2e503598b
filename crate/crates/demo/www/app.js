import init, { solveNetwork, solveGame, comparisonCurve, generate } from "./pkg/minmax_demo.js";

const $ = (id) => document.getElementById(id);
const COLORS = { sorted: "#555", bisect: "#1f77b4", hybrid: "#2ca02c", logstar: "#d62728", adaptive: "#9467bd" };

const NETWORK = `# s=0 a=1 b=2 t=3; the source may cut one arc
network 4 4
budget 0 1
arc 0 1 9
arc 0 2 8
arc 1 3 7
arc 2 3 6
source 0
sink 3
`;

const GAME = `game 3 4
node 0 max
node 1 min
node 2 min
arc 0 1 3
arc 0 2 7
arc 1 1 1
arc 2 2 2
start 0
`;

function circle(count, canvas) {
  const cx = canvas.width / 2, cy = canvas.height / 2;
  const r = Math.min(cx, cy) - 30;
  return Array.from({ length: count }, (_, i) => {
    const a = (2 * Math.PI * i) / count - Math.PI / 2;
    return count === 1 ? [cx, cy] : [cx + r * Math.cos(a), cy + r * Math.sin(a)];
  });
}

// arcs: [{tail, head, label}], style(i) -> {color, width, dash}
function drawGraph(canvas, pos, arcs, style, node) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.font = "12px sans-serif";
  const seen = new Map();
  arcs.forEach((arc, i) => {
    const key = `${Math.min(arc.tail, arc.head)}-${Math.max(arc.tail, arc.head)}`;
    const bend = 18 * (seen.get(key) ?? 0) + (arc.tail < arc.head ? 0 : 9);
    seen.set(key, (seen.get(key) ?? 0) + 1);
    const s = style(i);
    ctx.strokeStyle = ctx.fillStyle = s.color;
    ctx.lineWidth = s.width;
    ctx.setLineDash(s.dash ?? []);
    const [x1, y1] = pos[arc.tail], [x2, y2] = pos[arc.head];
    let lx, ly;
    ctx.beginPath();
    if (arc.tail === arc.head) {
      ctx.arc(x1, y1 - 22, 12 + bend / 3, 0, 2 * Math.PI);
      ctx.stroke();
      [lx, ly] = [x1, y1 - 40 - bend / 3];
    } else {
      const mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
      const dx = x2 - x1, dy = y2 - y1, len = Math.hypot(dx, dy);
      const qx = mx - (dy / len) * (bend + 10), qy = my + (dx / len) * (bend + 10);
      ctx.moveTo(x1, y1);
      ctx.quadraticCurveTo(qx, qy, x2, y2);
      ctx.stroke();
      // arrowhead at the node boundary
      const tx = x2 - qx, ty = y2 - qy, tl = Math.hypot(tx, ty);
      const ex = x2 - (tx / tl) * 14, ey = y2 - (ty / tl) * 14;
      ctx.setLineDash([]);
      ctx.beginPath();
      ctx.moveTo(ex, ey);
      ctx.lineTo(ex - (tx / tl) * 8 - (ty / tl) * 4, ey - (ty / tl) * 8 + (tx / tl) * 4);
      ctx.lineTo(ex - (tx / tl) * 8 + (ty / tl) * 4, ey - (ty / tl) * 8 - (tx / tl) * 4);
      ctx.fill();
      [lx, ly] = [(mx + qx) / 2, (my + qy) / 2];
    }
    ctx.setLineDash([]);
    ctx.fillText(arc.label, lx + 3, ly - 3);
  });
  pos.forEach(([x, y], v) => {
    const n = node(v);
    ctx.lineWidth = n.ring ? 3 : 1;
    ctx.strokeStyle = "#222";
    ctx.fillStyle = n.fill;
    ctx.beginPath();
    if (n.square) ctx.rect(x - 12, y - 12, 24, 24);
    else ctx.arc(x, y, 13, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#000";
    ctx.fillText(n.text, x - 4 * n.text.length + 1, y + 4);
  });
}

function show(out, f) {
  out.classList.remove("error");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e);
  }
}

function runNetwork() {
  show($("network-out"), () => {
    const v = JSON.parse(solveNetwork($("network-text").value, $("algorithm").value));
    const removed = new Set(v.removed), path = new Set(v.witness_path);
    const pos = circle(v.vertices, $("network-canvas"));
    drawGraph($("network-canvas"), pos, v.arcs,
      (i) => removed.has(i) ? { color: "#c00", width: 1.5, dash: [5, 4] }
        : path.has(i) ? { color: "#080", width: 3 } : { color: "#888", width: 1 },
      (u) => ({
        fill: u === v.source ? "#cde" : u === v.sink ? "#fdc" : "#eee",
        text: v.budgets[u] > 0 ? `${u}/${v.budgets[u]}` : String(u),
      }));
    return `width ${v.width}\nremoved arcs [${v.removed.join(", ")}] (red, dashed)\n` +
      `witness path [${v.witness_path.join(", ")}] (green)\n` +
      `${v.comparisons} comparisons, ${v.iterations} rounds`;
  });
}

function runGame() {
  show($("game-out"), () => {
    const v = JSON.parse(solveGame($("game-text").value, $("algorithm").value));
    const chosen = new Set(v.strategy);
    const pos = circle(v.max_nodes.length, $("game-canvas"));
    drawGraph($("game-canvas"), pos, v.arcs,
      (i) => chosen.has(i) ? { color: "#06c", width: 3 } : { color: "#aaa", width: 1 },
      (u) => ({ fill: v.max_nodes[u] ? "#fdd" : "#ddf", square: v.max_nodes[u], ring: u === v.start, text: String(u) }));
    return `value ${v.value}\nstrategy arcs (blue) per node [${v.strategy.join(", ")}]\n` +
      `squares: Max, circles: Min, thick ring: start\n${v.comparisons} comparisons, ${v.iterations} rounds`;
  });
}

function runCurve() {
  const status = $("curve-status");
  let points;
  try {
    points = JSON.parse(comparisonCurve($("curve-problem").value, $("curve-sizes").value, Number($("seed").value)));
    status.textContent = "";
  } catch (e) {
    status.textContent = String(e);
    return;
  }
  const canvas = $("curve-canvas"), ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pad = 45, w = canvas.width - 2 * pad - 90, h = canvas.height - 2 * pad;
  const xs = points.map((p) => Math.log2(p.n)), ys = points.map((p) => p.comparisons / p.n);
  const [x0, x1] = [Math.min(...xs), Math.max(...xs) || 1];
  const y1 = Math.max(...ys) * 1.1 || 1;
  const X = (x) => pad + (x1 === x0 ? w / 2 : ((x - x0) / (x1 - x0)) * w);
  const Y = (y) => pad + h - (y / y1) * h;
  ctx.strokeStyle = "#000";
  ctx.lineWidth = 1;
  ctx.strokeRect(pad, pad, w, h);
  ctx.fillStyle = "#000";
  ctx.font = "12px sans-serif";
  ctx.fillText("comparisons / n", 4, pad - 10);
  ctx.fillText("n (log scale)", pad + w / 2 - 30, canvas.height - 8);
  for (const n of new Set(points.map((p) => p.n))) ctx.fillText(String(n), X(Math.log2(n)) - 10, pad + h + 16);
  for (let k = 0; k <= 4; k++) ctx.fillText((y1 * k / 4).toFixed(1), 8, Y(y1 * k / 4) + 4);
  Object.entries(COLORS).forEach(([alg, color], i) => {
    const series = points.filter((p) => p.algorithm === alg);
    ctx.strokeStyle = ctx.fillStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    series.forEach((p, j) => {
      const [x, y] = [X(Math.log2(p.n)), Y(p.comparisons / p.n)];
      j ? ctx.lineTo(x, y) : ctx.moveTo(x, y);
    });
    ctx.stroke();
    ctx.fillText(alg, pad + w + 12, pad + 16 * i + 10);
  });
}

function regenerate(kind) {
  const seed = Number($("seed").value);
  const [text, out] = kind === "game" ? [$("game-text"), $("game-out")] : [$("network-text"), $("network-out")];
  show(out, () => {
    text.value = kind === "game" ? generate("game", 5, 10, seed) : generate("network", 7, 12, seed);
    return "";
  });
  kind === "game" ? runGame() : runNetwork();
}

await init();
$("network-text").value = NETWORK;
$("game-text").value = GAME;
$("network-solve").onclick = runNetwork;
$("game-solve").onclick = runGame;
$("network-gen").onclick = () => regenerate("network");
$("game-gen").onclick = () => regenerate("game");
$("curve-run").onclick = runCurve;
$("algorithm").onchange = () => { runNetwork(); runGame(); };
runNetwork();
runGame();
runCurve();
