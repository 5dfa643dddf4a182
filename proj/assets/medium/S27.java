class S27 extends Abstract1 {
  void enter() {
    send("msg11");
    log("note");
    switch (event) {
      case EV475:
        try {
          log("note");
          new S13();
          try {
            log("note");
            send("msg7");
            new S23();
            send("msg7");
          } catch (IOException e) {
            send("msg7");
            send("msg14");
            new S30();
          } catch (IllegalStateException e) {
            new S16();
            send("msg11");
            new S26();
            send("msg17");
          }
          new S11();
        } finally {
          new S5();
          if (x5 > 0) {
            send("msg9");
            send("msg4");
          } else {
            send("msg11");
            new S21();
            new S19();
            new State();
          }
        }
        new S10();
        new S11();
        break;
      case EV476:
        if (x7 > 0) {
          send("msg9");
          new State();
          send("msg13");
        } else {
          switch (event) {
            case EV477:
              send("msg14");
              new S2();
              break;
            case EV478:
              new S24();
              send("msg19");
              break;
          }
          if (x3 > 0) {
            new S15();
          } else {
            new S19();
            send("msg4");
            send("msg12");
            send("msg3");
          }
          log("note");
        }
        break;
      case EV479:
        new S23();
        new S18();
        new S23();
        break;
    }
    switch (event) {
      case EV480:
        new S28();
        switch (event) {
          case EV481:
            new S15();
            break;
        }
        send("msg16");
        break;
    }
  }
  void exit() {
    new S25();
  }
  void handle() {
    log("note");
    new S28();
  }
  void tick() {
    new S19();
    try {
      try {
        new S14();
      } catch (IllegalStateException e) {
        new S2();
        new S16();
        send("msg18");
      } finally {
        try {
          new Helper();
          send("msg2");
        } catch (IOException e) {
          new S5();
          new S12();
        } catch (IOException e) {
          send("msg18");
          send("msg8");
        }
        new S22();
        new S11();
      }
      log("note");
      send("msg1");
      try {
        send("msg19");
        new Helper();
      } catch (IllegalStateException e) {
        if (x9 > 0) {
          new S5();
          send("msg7");
        }
        log("note");
        send("msg16");
        new S10();
      } catch (IOException e) {
        new S11();
        send("msg2");
        log("note");
      }
    } catch (TimeoutException e) {
      new S18();
      send("msg8");
      new S10();
    }
    switch (event) {
      case EV482:
        new Helper();
        break;
      case EV483:
        if (x8 > 0) {
          send("msg4");
          if (x8 > 0) {
            new S7();
            send("msg6");
            send("msg8");
            send("msg5");
          } else {
            new S27();
            new S2();
          }
          new S16();
          new Helper();
        } else {
          new S25();
          if (x7 > 0) {
            new S27();
          } else {
            new Helper();
            new S26();
            send("msg9");
          }
          if (x6 > 0) {
            log("note");
            new State();
            new S29();
            new S10();
          }
          new Helper();
        }
        switch (event) {
          case EV484:
            send("msg0");
            if (x2 > 0) {
              new S15();
              send("msg14");
              send("msg18");
              send("msg13");
            } else {
              new S19();
              send("msg9");
              send("msg16");
            }
            if (x1 > 0) {
              new State();
              send("msg8");
            } else {
              send("msg15");
              new S26();
            }
            break;
          case EV485:
            switch (event) {
              case EV486:
                send("msg7");
                break;
              case EV487:
                new S19();
                break;
            }
            log("note");
            try {
              new S21();
              new S9();
            } catch (IllegalStateException e) {
              send("msg6");
              new S1();
              send("msg0");
            }
            try {
              new S19();
              send("msg2");
              new Helper();
            } catch (IllegalStateException e) {
              new S18();
              log("note");
            }
            break;
          case EV488:
            new Helper();
            new S4();
            if (x0 > 0) {
              send("msg0");
              new S30();
              new S1();
            }
            if (x9 > 0) {
              new S16();
              new S16();
              new S27();
              log("note");
            } else {
              send("msg8");
              new S8();
            }
            break;
        }
        new S2();
        break;
      case EV489:
        if (x0 > 0) {
          send("msg14");
          new S4();
          new S26();
        } else {
          send("msg10");
          try {
            log("note");
            send("msg2");
            new Helper();
            new S10();
          } catch (IllegalStateException e) {
            send("msg9");
            send("msg5");
            new S7();
          } finally {
            send("msg10");
            log("note");
          }
          switch (event) {
            case EV490:
              send("msg6");
              send("msg4");
              break;
            case EV491:
              new S15();
              new S13();
              send("msg15");
              new S26();
              break;
          }
          send("msg1");
        }
        new S17();
        try {
          switch (event) {
            case EV492:
              log("note");
              send("msg4");
              log("note");
              new S12();
              break;
            case EV493:
              send("msg18");
              break;
            case EV494:
              send("msg16");
              new S5();
              break;
          }
          log("note");
        } catch (IllegalStateException e) {
          new S1();
          try {
            send("msg3");
            send("msg6");
            send("msg17");
            send("msg5");
          } catch (IOException e) {
            send("msg19");
            send("msg3");
            new S18();
            new S16();
          }
          try {
            new S8();
            new S19();
          } catch (IOException e) {
            new S24();
            new S17();
            send("msg8");
            send("msg12");
          }
        } catch (IllegalStateException e) {
          new S2();
          new S14();
          new State();
        }
        new State();
        break;
    }
    if (x6 > 0) {
      switch (event) {
        case EV495:
          new S19();
          if (x4 > 0) {
            new S21();
            send("msg2");
            send("msg18");
            send("msg12");
          } else {
            log("note");
          }
          new S2();
          try {
            send("msg17");
          } catch (IOException e) {
            new S15();
            new S16();
            send("msg17");
            new S11();
          } catch (TimeoutException e) {
            send("msg17");
            new S22();
            new S24();
          }
          break;
      }
      if (x4 > 0) {
        if (x9 > 0) {
          new S17();
        }
        send("msg0");
      } else {
        if (x9 > 0) {
          send("msg4");
        }
        try {
          send("msg16");
        } catch (IllegalStateException e) {
          new S11();
          send("msg17");
          new S18();
        }
        if (x4 > 0) {
          send("msg4");
          new S9();
          new S12();
          send("msg5");
        }
        new S1();
      }
      switch (event) {
        case EV496:
          log("note");
          break;
      }
    } else {
      send("msg19");
      send("msg10");
    }
  }
  void reset() {
    new Helper();
    try {
      if (x3 > 0) {
        new S27();
        try {
          new S27();
          new S10();
        } catch (IllegalStateException e) {
          send("msg3");
        } finally {
          new State();
          send("msg18");
        }
        new S8();
        new S9();
      }
      new S26();
    } catch (TimeoutException e) {
      new S9();
    } catch (TimeoutException e) {
      send("msg9");
      if (x0 > 0) {
        switch (event) {
          case EV497:
            send("msg7");
            new S12();
            new S28();
            send("msg17");
            break;
          case EV498:
            send("msg13");
            break;
          case EV499:
            new S30();
            new S15();
            new S9();
            send("msg8");
            break;
        }
      }
    }
    new S11();
  }
}
