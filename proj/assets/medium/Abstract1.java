abstract class Abstract1 extends State {
}
