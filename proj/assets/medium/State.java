abstract class State {
}
