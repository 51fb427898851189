/** Bootstrap: wire the store to the section renderers. */

import { ApiClient } from "./api";
import {
  renderDominanceView,
  renderExplanation,
  renderImportanceEditor,
  renderWhatIfPanel,
} from "./render";
import { ExplorerStore } from "./store";

const api = new ApiClient("");
const store = new ExplorerStore(api);
const pendingEdge = { source: null as string | null };

function mount(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing mount point #${id}`);
  }
  return node;
}

const editorRoot = mount("importance-editor");
const dominanceRoot = mount("dominance-view");
const whatifRoot = mount("whatif-panel");
const explainRoot = mount("explanation");

store.subscribe((state) => {
  renderImportanceEditor(editorRoot, state, store, pendingEdge);
  renderDominanceView(dominanceRoot, state, store);
  renderWhatIfPanel(whatifRoot, state, store);
  renderExplanation(explainRoot, state);
});

void store.refresh();
